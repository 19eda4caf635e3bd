#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpaths/fpath.hpp"

namespace fpaths {

enum class InvFamily { I_101_102, J_101_021, Untagged };

const char* to_string(InvFamily family);

/// e_1..e_n with 0 <= e_i < i (stored 0-indexed).
class InvSeq {
 public:
  InvSeq() = default;

  /// Throws NotInversionSequence (0-based entry index) when 0 <= e_i < i
  /// fails, and NotAvoider when a tagged sequence contains one of its
  /// family's patterns.
  static InvSeq from_entries(std::vector<int> entries, InvFamily family = InvFamily::Untagged);
  static InvSeq trusted(std::vector<int> entries, InvFamily family) {
    return InvSeq(std::move(entries), family);
  }

  std::span<const int> entries() const { return entries_; }
  InvFamily family() const { return family_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  /// 1-based access.
  int at(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const InvSeq&, const InvSeq&) = default;

 private:
  InvSeq(std::vector<int> entries, InvFamily family)
      : entries_(std::move(entries)), family_(family) {}
  std::vector<int> entries_;
  InvFamily family_ = InvFamily::Untagged;
};

/// Replaces the i-th smallest distinct value by i-1.
std::vector<int> word_reduction(std::span<const int> w);

bool invseq_contains(std::span<const int> e, std::span<const int> pattern);
bool invseq_contains(const InvSeq& e, std::span<const int> pattern);
bool avoids_family(std::span<const int> e, InvFamily family);

struct MaxInfo {
  int max = 0;
  int maxid = 0;  // 1-based, rightmost occurrence
};
MaxInfo max_and_maxid(const InvSeq& e);

/// (maxid-max-1, omi, cons), omi and cons taken over [L-1].
StatTriple stats_I(const InvSeq& e);
FPath phi_I(const InvSeq& e, bool check = false);
InvSeq psi_I(const FPath& q);

/// Number of leading zeros.
int first_of(const InvSeq& j);
/// (first-1, omi, single), omi over [L-1].
StatTriple stats_J(const InvSeq& j);
/// Throws FormViolation (0-based entry index) when the positive entries are
/// not contiguous weakly increasing runs.
FPath phi_J(const InvSeq& j);
InvSeq psi_J(const FPath& q);

inline constexpr int kDefaultInvSeqGuard = 10;

/// Lexicographic. Untagged yields every inversion sequence of length n.
std::vector<InvSeq> gen_invseq(int n, InvFamily family, int guard = kDefaultInvSeqGuard);

InvSeq dsum_I(const InvSeq& e, const InvSeq& f);
/// Connected components, so that the left fold of dsum_I rebuilds g.
std::vector<InvSeq> decompose_I(const InvSeq& g);
InvSeq dsum_J(const InvSeq& e, const InvSeq& f);
std::vector<InvSeq> decompose_J(const InvSeq& g);

/// "0,1,0"
std::string render_invseq(const InvSeq& e);
InvSeq parse_invseq(const std::string& text, InvFamily family = InvFamily::Untagged);

}  // namespace fpaths
