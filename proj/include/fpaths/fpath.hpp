#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fpaths {

/// One step (dx, dy) of an F-path. Members of the step set are the north
/// step (0,1) and every (a,b) with a >= 1, b <= 1.
struct FStep {
  int dx = 0;
  int dy = 1;

  bool is_north() const { return dx == 0 && dy == 1; }
  bool in_step_set() const { return is_north() || (dx >= 1 && dy <= 1); }
  int rise() const { return dy - dx; }

  friend bool operator==(const FStep&, const FStep&) = default;
};

/// Canonical step order: north first, then by dx ascending, dy descending.
std::strong_ordering canonical_order(const FStep& a, const FStep& b);

inline constexpr FStep kNorth{0, 1};

/// The three matched statistics shared by every family: a height-like
/// value, a north-like value and an aone-like value.
struct StatTriple {
  int h = 0;
  int l = 0;
  int a1 = 0;

  friend auto operator<=>(const StatTriple&, const StatTriple&) = default;
};

std::string to_string(const StatTriple& t);

/// A lattice path from the origin whose steps lie in the step set and which
/// never goes below the diagonal (x <= y at every prefix).
class FPath {
 public:
  FPath() = default;

  /// Validates raw steps; throws StepNotInF or PrefixViolation. The error
  /// index is the 1-based step position i (the prefix x_i, y_i).
  static FPath from_steps(std::vector<FStep> steps);
  /// Skips validation. Callers must already hold a valid path.
  static FPath trusted(std::vector<FStep> steps) { return FPath(std::move(steps)); }

  std::span<const FStep> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const FStep& operator[](std::size_t i) const { return steps_[i]; }

  int height() const;

  friend bool operator==(const FPath&, const FPath&) = default;

 private:
  explicit FPath(std::vector<FStep> steps) : steps_(std::move(steps)) {}
  std::vector<FStep> steps_;
};

std::strong_ordering canonical_order(const FPath& a, const FPath& b);

FPath validate_fpath(std::span<const std::pair<int, int>> steps);

struct FPathStats {
  StatTriple triple;
  int bone = 0;
};

FPathStats fpath_stats(const FPath& q);

/// Stepwise involution: (0,1) is fixed, (a,b) -> (2-b, 2-a).
FStep involution_step(const FStep& s);
FPath involution_phi_F(const FPath& q);

inline constexpr int kDefaultFPathGuard = 10;

/// All F-paths of length n in canonical order.
std::vector<FPath> gen_fpaths(int n, int guard = kDefaultFPathGuard);

FPath fpath_direct_sum(const FPath& q1, const FPath& q2);

/// Splits q = Q_1 (0,1) Q_2 ... (0,1) Q_{m+1} with every component of height 0.
std::vector<FPath> fpath_decompose(const FPath& q);

/// Left fold of fpath_direct_sum; parts must be nonempty.
FPath fpath_compose(std::span<const FPath> parts);

/// "0,1 3,-1"; the empty path is "-".
std::string render_fpath(const FPath& q);
FPath parse_fpath(const std::string& text);

}  // namespace fpaths
