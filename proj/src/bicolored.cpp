#include "fpaths/bicolored.hpp"

#include "fpaths/error.hpp"

namespace fpaths {

using Word = std::vector<BLetter>;

namespace {

// Run-form automaton. A red run may only be left for a black run, and a black
// run only for an up run; the word may not end inside a black run.
enum class RunState { Start, Up, Red, Black };

bool advance(RunState& state, BLetter c) {
  switch (state) {
    case RunState::Start:
      if (c != BLetter::U) return false;
      state = RunState::Up;
      return true;
    case RunState::Up:
      state = c == BLetter::U ? RunState::Up : c == BLetter::Dr ? RunState::Red : RunState::Black;
      return true;
    case RunState::Red:
      if (c == BLetter::U) return false;
      state = c == BLetter::Dr ? RunState::Red : RunState::Black;
      return true;
    case RunState::Black:
      if (c == BLetter::Dr) return false;
      state = c == BLetter::U ? RunState::Up : RunState::Black;
      return true;
  }
  return false;
}

}  // namespace

BicoloredWord BicoloredWord::from_letters(Word letters) {
  if (letters.empty()) throw Error(ErrorKind::RunFormViolation, "empty word", 0);
  RunState state = RunState::Start;
  int height = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    height += letters[i] == BLetter::U ? 1 : -1;
    if (height < 0) throw Error(ErrorKind::BelowAxis, "", i);
    if (!advance(state, letters[i])) throw Error(ErrorKind::RunFormViolation, "", i);
  }
  if (state == RunState::Black) {
    throw Error(ErrorKind::RunFormViolation, "word ends in a black run", letters.size() - 1);
  }
  if (height != 0) throw Error(ErrorKind::NotClosed, "ends at height " + std::to_string(height));
  return BicoloredWord(std::move(letters));
}

BicoloredWord validate_bicolored(Word letters) {
  return BicoloredWord::from_letters(std::move(letters));
}

int BicoloredWord::last() const {
  int run = 0;
  for (auto it = letters_.rbegin(); it != letters_.rend() && *it == BLetter::Dr; ++it) ++run;
  return run;
}

StatTriple bicolored_stats(const BicoloredWord& b) {
  auto w = b.letters();
  StatTriple t;
  t.h = b.last() - 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == BLetter::U && w[i + 1] == BLetter::U) ++t.l;
    if (i + 2 < w.size() && w[i + 1] == BLetter::Db && w[i + 2] == BLetter::U &&
        (w[i] == BLetter::U || w[i] == BLetter::Dr)) {
      ++t.a1;
    }
  }
  return t;
}

FPath phi_B(const BicoloredWord& b) {
  auto w = b.letters();
  std::vector<FStep> steps;
  std::size_t i = 0;
  while (true) {
    // w[i] is the u opening a segment u r^c b^a.
    std::size_t j = i + 1;
    int reds = 0;
    int blacks = 0;
    while (j < w.size() && w[j] == BLetter::Dr) ++reds, ++j;
    while (j < w.size() && w[j] == BLetter::Db) ++blacks, ++j;
    if (j == w.size()) break;  // final segment u r^{last}
    steps.push_back({blacks, 1 - reds});
    i = j;
  }
  return FPath::trusted(std::move(steps));
}

BicoloredWord psi_B(const FPath& q) {
  Word w;
  for (const FStep& s : q.steps()) {
    w.push_back(BLetter::U);
    w.insert(w.end(), static_cast<std::size_t>(1 - s.dy), BLetter::Dr);
    w.insert(w.end(), static_cast<std::size_t>(s.dx), BLetter::Db);
  }
  w.push_back(BLetter::U);
  w.insert(w.end(), static_cast<std::size_t>(q.height() + 1), BLetter::Dr);
  return BicoloredWord::trusted(std::move(w));
}

namespace {

void extend(Word& prefix, RunState state, int height, int remaining,
            std::vector<BicoloredWord>& out) {
  if (remaining == 0) {
    if (height == 0 && state != RunState::Black) out.push_back(BicoloredWord::trusted(prefix));
    return;
  }
  for (BLetter c : {BLetter::U, BLetter::Dr, BLetter::Db}) {
    int next_height = height + (c == BLetter::U ? 1 : -1);
    if (next_height < 0 || next_height > remaining - 1) continue;
    RunState next = state;
    if (!advance(next, c)) continue;
    prefix.push_back(c);
    extend(prefix, next, next_height, remaining - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BicoloredWord> gen_bicolored(int n_plus_1, int guard) {
  check_guard(n_plus_1, guard + 1, "gen_bicolored");
  std::vector<BicoloredWord> out;
  if (n_plus_1 < 1) return out;
  Word prefix;
  extend(prefix, RunState::Start, 0, 2 * n_plus_1, out);
  return out;
}

BicoloredWord bicolored_direct_sum(const BicoloredWord& b1, const BicoloredWord& b2) {
  const int last1 = b1.last();
  Word w(b1.letters().begin(), b1.letters().end() - last1);
  w.insert(w.end(), b2.letters().begin(), b2.letters().end());
  w.insert(w.end(), static_cast<std::size_t>(last1), BLetter::Dr);
  return BicoloredWord::trusted(std::move(w));
}

std::string render_bicolored(const BicoloredWord& b) {
  std::string out;
  for (BLetter c : b.letters()) out += static_cast<char>(c);
  return out;
}

BicoloredWord parse_bicolored(const std::string& text) {
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'u': w.push_back(BLetter::U); break;
      case 'b': w.push_back(BLetter::Db); break;
      case 'r': w.push_back(BLetter::Dr); break;
      default: throw Error(ErrorKind::ParseError, "expected one of u, b, r", i);
    }
  }
  if (w.empty()) throw Error(ErrorKind::ParseError, "empty input", 0);
  return BicoloredWord::from_letters(std::move(w));
}

}  // namespace fpaths
