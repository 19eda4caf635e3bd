#pragma once

#include <span>
#include <string>
#include <vector>

#include "fpaths/fpath.hpp"

namespace fpaths {

/// u = (1,1), d = (1,-1), h = (2,0).
enum class SLetter : char { U = 'u', D = 'd', H = 'h' };

/// A Schroder path without triple descents.
class SchroderWord {
 public:
  SchroderWord() = default;

  /// Throws BelowAxis / TripleDescent (0-based letter index; for a triple
  /// descent, the index of its first d) or NotClosed.
  static SchroderWord from_letters(std::vector<SLetter> letters);
  static SchroderWord trusted(std::vector<SLetter> letters) {
    return SchroderWord(std::move(letters));
  }

  std::span<const SLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int semilength() const;

  friend bool operator==(const SchroderWord&, const SchroderWord&) = default;

 private:
  explicit SchroderWord(std::vector<SLetter> letters) : letters_(std::move(letters)) {}
  std::vector<SLetter> letters_;
};

SchroderWord validate_schroder(std::vector<SLetter> letters);

/// (comp, hdd, peak): horizontal steps on the axis; horizontal steps plus dd
/// factors; ud factors.
StatTriple schroder_stats(const SchroderWord& p);

/// The five ways a nonempty word can end.
enum class SchroderSuffix { H, UD, HD, UDD, HDD };
SchroderSuffix schroder_suffix(const SchroderWord& p);

FPath phi_P(const SchroderWord& p);
SchroderWord psi_P(const FPath& q);

std::vector<SchroderWord> gen_schroder(int n, int guard = kDefaultFPathGuard);

SchroderWord schroder_direct_sum(const SchroderWord& p1, const SchroderWord& p2);

/// "uhd"; the empty path is "-".
std::string render_schroder(const SchroderWord& p);
SchroderWord parse_schroder(const std::string& text);

}  // namespace fpaths
