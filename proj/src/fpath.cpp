#include "fpaths/fpath.hpp"

#include <algorithm>
#include <cctype>

#include "fpaths/error.hpp"

namespace fpaths {

std::strong_ordering canonical_order(const FStep& a, const FStep& b) {
  if (a.is_north() || b.is_north()) {
    if (a.is_north() && b.is_north()) return std::strong_ordering::equal;
    return a.is_north() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.dx <=> b.dx; c != 0) return c;
  return b.dy <=> a.dy;
}

std::strong_ordering canonical_order(const FPath& a, const FPath& b) {
  auto sa = a.steps();
  auto sb = b.steps();
  std::size_t n = std::min(sa.size(), sb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = canonical_order(sa[i], sb[i]); c != 0) return c;
  }
  return sa.size() <=> sb.size();
}

std::string to_string(const StatTriple& t) {
  return std::to_string(t.h) + "," + std::to_string(t.l) + "," + std::to_string(t.a1);
}

FPath FPath::from_steps(std::vector<FStep> steps) {
  long long sx = 0;
  long long sy = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const FStep& s = steps[i];
    if (!s.in_step_set()) {
      throw Error(ErrorKind::StepNotInF,
                  "(" + std::to_string(s.dx) + "," + std::to_string(s.dy) + ")", i + 1);
    }
    sx += s.dx;
    sy += s.dy;
    if (sx > sy) {
      throw Error(ErrorKind::PrefixViolation, "x exceeds y at this prefix", i + 1);
    }
  }
  return FPath(std::move(steps));
}

int FPath::height() const {
  int h = 0;
  for (const auto& s : steps_) h += s.rise();
  return h;
}

FPath validate_fpath(std::span<const std::pair<int, int>> steps) {
  std::vector<FStep> out;
  out.reserve(steps.size());
  for (auto [dx, dy] : steps) out.push_back({dx, dy});
  return FPath::from_steps(std::move(out));
}

FPathStats fpath_stats(const FPath& q) {
  FPathStats st;
  for (const auto& s : q.steps()) {
    st.triple.h += s.rise();
    if (s.is_north()) ++st.triple.l;
    if (s.dx == 1) ++st.triple.a1;
    if (s.dy == 1) ++st.bone;
  }
  return st;
}

FStep involution_step(const FStep& s) {
  if (s.is_north()) return s;
  return {2 - s.dy, 2 - s.dx};
}

FPath involution_phi_F(const FPath& q) {
  std::vector<FStep> out;
  out.reserve(q.size());
  for (const auto& s : q.steps()) out.push_back(involution_step(s));
  return FPath::trusted(std::move(out));
}

namespace {

// Non-north steps admissible at prefix height h, in canonical order: a from 1
// to h+1, and for each a, b from 1 down to a-h.
void extend(std::vector<FStep>& prefix, int height, int remaining,
            std::vector<FPath>& out) {
  if (remaining == 0) {
    out.push_back(FPath::trusted(prefix));
    return;
  }
  prefix.push_back(kNorth);
  extend(prefix, height + 1, remaining - 1, out);
  prefix.pop_back();
  for (int a = 1; a <= height + 1; ++a) {
    for (int b = 1; a - b <= height; --b) {
      prefix.push_back({a, b});
      extend(prefix, height - (a - b), remaining - 1, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<FPath> gen_fpaths(int n, int guard) {
  check_guard(n, guard, "gen_fpaths");
  std::vector<FPath> out;
  if (n < 0) return out;
  std::vector<FStep> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend(prefix, 0, n, out);
  return out;
}

FPath fpath_direct_sum(const FPath& q1, const FPath& q2) {
  std::vector<FStep> out(q1.steps().begin(), q1.steps().end());
  out.push_back(kNorth);
  out.insert(out.end(), q2.steps().begin(), q2.steps().end());
  return FPath::trusted(std::move(out));
}

std::vector<FPath> fpath_decompose(const FPath& q) {
  auto steps = q.steps();
  const std::size_t n = steps.size();
  // heights[p] = prefix height after p steps.
  std::vector<int> heights(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) heights[p + 1] = heights[p] + steps[p].rise();
  const int m = heights[n];

  // Separator i (1-based) is the step right after the last prefix whose
  // height is <= i-1; only north steps raise the height, so it is a north
  // step from i-1 to i after which the path stays at or above i.
  std::vector<std::size_t> separators;
  separators.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    std::size_t last = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      if (heights[p] <= i - 1) last = p;
    }
    separators.push_back(last);  // step index (0-based) of the separator
  }

  std::vector<FPath> parts;
  parts.reserve(static_cast<std::size_t>(m) + 1);
  std::size_t begin = 0;
  for (std::size_t sep : separators) {
    parts.push_back(FPath::trusted(std::vector<FStep>(steps.begin() + begin, steps.begin() + sep)));
    begin = sep + 1;
  }
  parts.push_back(FPath::trusted(std::vector<FStep>(steps.begin() + begin, steps.end())));
  return parts;
}

FPath fpath_compose(std::span<const FPath> parts) {
  FPath acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = fpath_direct_sum(acc, parts[i]);
  return acc;
}

std::string render_fpath(const FPath& q) {
  if (q.empty()) return "-";
  std::string out;
  for (const auto& s : q.steps()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.dx) + "," + std::to_string(s.dy);
  }
  return out;
}

namespace {

int parse_int(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw Error(ErrorKind::ParseError, "expected integer", pos);
  }
  long long v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    if (v > 1'000'000'000) throw Error(ErrorKind::ParseError, "integer too large", start);
    ++pos;
  }
  return static_cast<int>(negative ? -v : v);
}

}  // namespace

FPath parse_fpath(const std::string& text) {
  if (text == "-") return FPath{};
  std::vector<FStep> steps;
  std::size_t pos = 0;
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty input (use '-')", 0);
  while (true) {
    FStep s;
    s.dx = parse_int(text, pos);
    if (pos >= text.size() || text[pos] != ',') {
      throw Error(ErrorKind::ParseError, "expected ','", pos);
    }
    ++pos;
    s.dy = parse_int(text, pos);
    steps.push_back(s);
    if (pos == text.size()) break;
    if (text[pos] != ' ') throw Error(ErrorKind::ParseError, "expected ' '", pos);
    ++pos;
  }
  return FPath::from_steps(std::move(steps));
}

}  // namespace fpaths
