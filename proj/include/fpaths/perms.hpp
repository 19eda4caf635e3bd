#pragma once

#include <span>
#include <string>
#include <vector>

#include "fpaths/fpath.hpp"

namespace fpaths {

/// One-line notation of a permutation of 1..n (stored 0-indexed; the
/// sentinel pi(0) = 0 used by shape analysis is implicit).
class Permutation {
 public:
  Permutation() = default;

  /// Throws NotPermutation when the values are not a rearrangement of 1..n.
  static Permutation from_values(std::vector<int> values);
  static Permutation trusted(std::vector<int> values) { return Permutation(std::move(values)); }

  std::span<const int> values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  /// 1-based access, matching pi(i).
  int at(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

bool perm_contains(const Permutation& p, const Permutation& pattern);
/// True when p avoids 2341, 2431 and 3241.
bool is_avoider(const Permutation& p);

inline constexpr int kDefaultPermGuard = 9;

/// Avoiders of length n in lexicographic order.
std::vector<Permutation> gen_avoiders(int n, int guard = kDefaultPermGuard);

Permutation perm_direct_sum(const Permutation& p1, const Permutation& p2);
/// Maximal factorisation into indecomposable blocks (each reduced to 1..k).
std::vector<Permutation> block_decompose(const Permutation& p);
/// Left fold of perm_direct_sum.
Permutation perm_compose(std::span<const Permutation> parts);
int block_count(const Permutation& p);

int ascents(const Permutation& p);
/// Number of i with: pi(j) < pi(i) and pi(k) < pi(i) imply pi(j) < pi(k), for
/// all j < i < k.
int critical_count(const Permutation& p);

/// (block-1, asc, crit-asc-1).
StatTriple perm_stats(const Permutation& p);

enum class ShapeCase {
  ZEqLt,  // z = n, z < w
  ZLtLt,  // z < n, z < w
  ZEqGt,  // z = n, z > w
  ZLtGt,  // z < n, z > w
};

/// For a permutation of length n+1: x = position of n+1, z = max of
/// pi(0..x-1) with pi(0) = 0, y = position of z (0 when z is the sentinel),
/// w = min of pi(x..n+1).
struct ShapeData {
  int x = 0;
  int y = 0;
  int z = 0;
  int w = 0;
  ShapeCase shape = ShapeCase::ZEqLt;
};

ShapeData shape_analysis(const Permutation& p);

/// Checks the structural set equalities that shape_analysis guarantees for
/// avoiders; returns false on the first mismatch.
bool shape_set_equalities_hold(const Permutation& p, const ShapeData& s);

/// Throws NotAvoider when `check` is set and p contains a forbidden pattern.
FPath phi_S(const Permutation& p, bool check = false);
Permutation psi_S(const FPath& q);

/// "2 3 1"
std::string render_perm(const Permutation& p);
Permutation parse_perm(const std::string& text);

}  // namespace fpaths
