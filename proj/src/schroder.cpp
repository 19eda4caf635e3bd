#include "fpaths/schroder.hpp"

#include <cassert>

#include "fpaths/error.hpp"

namespace fpaths {

using Word = std::vector<SLetter>;

SchroderWord SchroderWord::from_letters(Word letters) {
  int height = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    switch (letters[i]) {
      case SLetter::U: ++height; break;
      case SLetter::D: --height; break;
      case SLetter::H: break;
    }
    if (height < 0) throw Error(ErrorKind::BelowAxis, "", i);
    if (i >= 2 && letters[i] == SLetter::D && letters[i - 1] == SLetter::D &&
        letters[i - 2] == SLetter::D) {
      throw Error(ErrorKind::TripleDescent, "", i - 2);
    }
  }
  if (height != 0) throw Error(ErrorKind::NotClosed, "ends at height " + std::to_string(height));
  return SchroderWord(std::move(letters));
}

int SchroderWord::semilength() const {
  int x = 0;
  for (SLetter c : letters_) x += (c == SLetter::H) ? 2 : 1;
  return x / 2;
}

SchroderWord validate_schroder(Word letters) {
  return SchroderWord::from_letters(std::move(letters));
}

namespace {

int comp_of(std::span<const SLetter> w) {
  int height = 0;
  int comp = 0;
  for (SLetter c : w) {
    if (c == SLetter::U) ++height;
    else if (c == SLetter::D) --height;
    else if (height == 0) ++comp;
  }
  return comp;
}

// Index of the u matched by the d at `d_pos`.
std::size_t matching_up(std::span<const SLetter> w, std::size_t d_pos) {
  int depth = 0;
  for (std::size_t i = d_pos; i-- > 0;) {
    if (w[i] == SLetter::D) {
      ++depth;
    } else if (w[i] == SLetter::U) {
      if (depth == 0) return i;
      --depth;
    }
  }
  assert(false && "unmatched down step");
  return 0;
}

// Indices of the horizontal steps on the axis, left to right.
std::vector<std::size_t> axis_h_positions(const Word& w) {
  std::vector<std::size_t> out;
  int height = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == SLetter::U) ++height;
    else if (w[i] == SLetter::D) --height;
    else if (height == 0) out.push_back(i);
  }
  return out;
}

Word slice(const Word& w, std::size_t begin, std::size_t end) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(begin),
              w.begin() + static_cast<std::ptrdiff_t>(end));
}

void append(Word& out, const Word& part) { out.insert(out.end(), part.begin(), part.end()); }

}  // namespace

StatTriple schroder_stats(const SchroderWord& p) {
  auto w = p.letters();
  StatTriple t;
  t.h = comp_of(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == SLetter::H) ++t.l;
    if (i + 1 < w.size()) {
      if (w[i] == SLetter::D && w[i + 1] == SLetter::D) ++t.l;
      if (w[i] == SLetter::U && w[i + 1] == SLetter::D) ++t.a1;
    }
  }
  return t;
}

SchroderSuffix schroder_suffix(const SchroderWord& p) {
  auto w = p.letters();
  const std::size_t n = w.size();
  assert(n > 0);
  if (w[n - 1] == SLetter::H) return SchroderSuffix::H;
  if (w[n - 2] == SLetter::U) return SchroderSuffix::UD;
  if (w[n - 2] == SLetter::H) return SchroderSuffix::HD;
  return w[n - 3] == SLetter::U ? SchroderSuffix::UDD : SchroderSuffix::HDD;
}

FPath phi_P(const SchroderWord& p) {
  Word w(p.letters().begin(), p.letters().end());
  std::vector<FStep> reversed;
  while (!w.empty()) {
    const std::size_t n = w.size();
    switch (schroder_suffix(SchroderWord::trusted(w))) {
      case SchroderSuffix::H:
        reversed.push_back(kNorth);
        w.pop_back();
        break;
      case SchroderSuffix::UD:
        reversed.push_back({1, 1});
        w.resize(n - 2);
        break;
      case SchroderSuffix::HD: {
        // w = X u Y h d  ->  X h Y, step (comp(Y)+2, 1)
        std::size_t u = matching_up(w, n - 1);
        Word y = slice(w, u + 1, n - 2);
        int k = comp_of(y);
        Word next = slice(w, 0, u);
        next.push_back(SLetter::H);
        append(next, y);
        w = std::move(next);
        reversed.push_back({k + 2, 1});
        break;
      }
      case SchroderSuffix::UDD: {
        // w = X u Z u d d  ->  X h Z, step (1, -comp(Z))
        std::size_t u = matching_up(w, n - 1);
        Word z = slice(w, u + 1, n - 3);
        int j = comp_of(z);
        Word next = slice(w, 0, u);
        next.push_back(SLetter::H);
        append(next, z);
        w = std::move(next);
        reversed.push_back({1, -j});
        break;
      }
      case SchroderSuffix::HDD: {
        // w = X u Y u Z h d d  ->  X h Y h Z, step (comp(Y)+2, -comp(Z))
        std::size_t outer = matching_up(w, n - 1);
        std::size_t inner = matching_up(w, n - 2);
        Word y = slice(w, outer + 1, inner);
        Word z = slice(w, inner + 1, n - 3);
        int k = comp_of(y);
        int j = comp_of(z);
        Word next = slice(w, 0, outer);
        next.push_back(SLetter::H);
        append(next, y);
        next.push_back(SLetter::H);
        append(next, z);
        w = std::move(next);
        reversed.push_back({k + 2, -j});
        break;
      }
    }
  }
  return FPath::trusted(std::vector<FStep>(reversed.rbegin(), reversed.rend()));
}

SchroderWord psi_P(const FPath& q) {
  Word w;
  for (const FStep& s : q.steps()) {
    if (s.is_north()) {
      w.push_back(SLetter::H);
      continue;
    }
    if (s.dx == 1 && s.dy == 1) {
      w.push_back(SLetter::U);
      w.push_back(SLetter::D);
      continue;
    }
    auto hs = axis_h_positions(w);
    const int c = static_cast<int>(hs.size());
    if (s.dy == 1) {
      // (k+2, 1): w = X h Y with comp(Y) = k  ->  X u Y h d
      const int k = s.dx - 2;
      assert(c >= k + 1);
      std::size_t split = hs[static_cast<std::size_t>(c - k - 1)];
      Word next = slice(w, 0, split);
      next.push_back(SLetter::U);
      append(next, slice(w, split + 1, w.size()));
      next.push_back(SLetter::H);
      next.push_back(SLetter::D);
      w = std::move(next);
    } else if (s.dx == 1) {
      // (1, -j): w = X h Z with comp(Z) = j  ->  X u Z u d d
      const int j = -s.dy;
      assert(c >= j + 1);
      std::size_t split = hs[static_cast<std::size_t>(c - j - 1)];
      Word next = slice(w, 0, split);
      next.push_back(SLetter::U);
      append(next, slice(w, split + 1, w.size()));
      next.insert(next.end(), {SLetter::U, SLetter::D, SLetter::D});
      w = std::move(next);
    } else {
      // (k+2, -j): w = X h Y h Z  ->  X u Y u Z h d d
      const int k = s.dx - 2;
      const int j = -s.dy;
      assert(c >= k + j + 2);
      std::size_t first = hs[static_cast<std::size_t>(c - k - j - 2)];
      std::size_t second = hs[static_cast<std::size_t>(c - j - 1)];
      Word next = slice(w, 0, first);
      next.push_back(SLetter::U);
      append(next, slice(w, first + 1, second));
      next.push_back(SLetter::U);
      append(next, slice(w, second + 1, w.size()));
      next.insert(next.end(), {SLetter::H, SLetter::D, SLetter::D});
      w = std::move(next);
    }
  }
  return SchroderWord::trusted(std::move(w));
}

namespace {

void extend(Word& prefix, int x, int height, int target_x, std::vector<SchroderWord>& out) {
  if (x == target_x) {
    if (height == 0) out.push_back(SchroderWord::trusted(prefix));
    return;
  }
  const int room = target_x - x;
  if (height + 1 <= room - 1) {
    prefix.push_back(SLetter::U);
    extend(prefix, x + 1, height + 1, target_x, out);
    prefix.pop_back();
  }
  const std::size_t n = prefix.size();
  const bool two_downs = n >= 2 && prefix[n - 1] == SLetter::D && prefix[n - 2] == SLetter::D;
  if (height > 0 && !two_downs) {
    prefix.push_back(SLetter::D);
    extend(prefix, x + 1, height - 1, target_x, out);
    prefix.pop_back();
  }
  if (room >= 2 && height <= room - 2) {
    prefix.push_back(SLetter::H);
    extend(prefix, x + 2, height, target_x, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SchroderWord> gen_schroder(int n, int guard) {
  check_guard(n, guard, "gen_schroder");
  std::vector<SchroderWord> out;
  if (n < 0) return out;
  Word prefix;
  extend(prefix, 0, 0, 2 * n, out);
  return out;
}

SchroderWord schroder_direct_sum(const SchroderWord& p1, const SchroderWord& p2) {
  Word w(p1.letters().begin(), p1.letters().end());
  w.push_back(SLetter::H);
  w.insert(w.end(), p2.letters().begin(), p2.letters().end());
  return SchroderWord::trusted(std::move(w));
}

std::string render_schroder(const SchroderWord& p) {
  if (p.empty()) return "-";
  std::string out;
  for (SLetter c : p.letters()) out += static_cast<char>(c);
  return out;
}

SchroderWord parse_schroder(const std::string& text) {
  if (text == "-") return SchroderWord{};
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty input (use '-')", 0);
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'u': w.push_back(SLetter::U); break;
      case 'd': w.push_back(SLetter::D); break;
      case 'h': w.push_back(SLetter::H); break;
      default: throw Error(ErrorKind::ParseError, "expected one of u, d, h", i);
    }
  }
  return SchroderWord::from_letters(std::move(w));
}

}  // namespace fpaths
