#pragma once

#include <span>
#include <string>
#include <vector>

#include "fpaths/fpath.hpp"

namespace fpaths {

/// Up step, black down step, red down step. Text letters are u, b, r.
enum class BLetter : char { U = 'u', Db = 'b', Dr = 'r' };

/// A restricted bicolored Dyck path:
///   u^{i_1} r^{j_1} b^{k_1} ... u^{i_{l-1}} r^{j_{l-1}} b^{k_{l-1}} u^{i_l} r^{j_l}
/// with every i and every non-final k positive.
class BicoloredWord {
 public:
  /// Throws BelowAxis / RunFormViolation (0-based letter index) or NotClosed.
  static BicoloredWord from_letters(std::vector<BLetter> letters);
  static BicoloredWord trusted(std::vector<BLetter> letters) {
    return BicoloredWord(std::move(letters));
  }

  std::span<const BLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int semilength() const { return static_cast<int>(letters_.size() / 2); }
  /// Length of the final red run.
  int last() const;

  friend bool operator==(const BicoloredWord&, const BicoloredWord&) = default;

 private:
  explicit BicoloredWord(std::vector<BLetter> letters) : letters_(std::move(letters)) {}
  std::vector<BLetter> letters_;
};

BicoloredWord validate_bicolored(std::vector<BLetter> letters);

/// (last-1, dasc, bval), with dasc counting uu factors and bval counting
/// u.b.u and r.b.u factors.
StatTriple bicolored_stats(const BicoloredWord& b);

FPath phi_B(const BicoloredWord& b);
BicoloredWord psi_B(const FPath& q);

/// All restricted bicolored Dyck paths of semilength n_plus_1, lexicographic
/// with u < r < b.
std::vector<BicoloredWord> gen_bicolored(int n_plus_1, int guard = kDefaultFPathGuard);

/// drop(b1's final red run) . b2 . r^{last(b1)}
BicoloredWord bicolored_direct_sum(const BicoloredWord& b1, const BicoloredWord& b2);

std::string render_bicolored(const BicoloredWord& b);
BicoloredWord parse_bicolored(const std::string& text);

}  // namespace fpaths
