#include "fpaths/perms.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "fpaths/error.hpp"

namespace fpaths {

using Values = std::vector<int>;

Permutation Permutation::from_values(Values values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::NotPermutation, "value " + std::to_string(v), i);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(values));
}

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

// Extends a partial embedding of pattern[0..k) at increasing indices of p.
bool embed(std::span<const int> p, std::span<const int> pattern, std::vector<std::size_t>& chosen,
           std::size_t from) {
  const std::size_t k = chosen.size();
  if (k == pattern.size()) return true;
  const std::size_t needed = pattern.size() - k;
  for (std::size_t i = from; i + needed <= p.size(); ++i) {
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      ok = sign(p[i] - p[chosen[t]]) == sign(pattern[k] - pattern[t]);
    }
    if (!ok) continue;
    chosen.push_back(i);
    if (embed(p, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

const Permutation& pattern_2341() {
  static const Permutation p = Permutation::trusted({2, 3, 4, 1});
  return p;
}
const Permutation& pattern_2431() {
  static const Permutation p = Permutation::trusted({2, 4, 3, 1});
  return p;
}
const Permutation& pattern_3241() {
  static const Permutation p = Permutation::trusted({3, 2, 4, 1});
  return p;
}

// All three patterns end in their smallest value preceded by a 3-prefix in
// which 4 is not first. Checks only occurrences whose last entry is the last
// entry of `prefix`.
bool forbidden_ending_here(const Values& prefix) {
  const std::size_t l = prefix.size();
  if (l < 4) return false;
  const int d = prefix[l - 1];
  for (std::size_t i = 0; i + 3 < l; ++i) {
    if (prefix[i] < d) continue;
    for (std::size_t j = i + 1; j + 2 < l; ++j) {
      if (prefix[j] < d) continue;
      for (std::size_t k = j + 1; k + 1 < l; ++k) {
        if (prefix[k] < d) continue;
        const int a = prefix[i], b = prefix[j], c = prefix[k];
        // 2341: a<b<c; 2431: a<c<b; 3241: b<a<c.
        if ((a < b && b < c) || (a < c && c < b) || (b < a && a < c)) return true;
      }
    }
  }
  return false;
}

void extend(Values& prefix, std::vector<bool>& used, int n, std::vector<Permutation>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Permutation::trusted(prefix));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    prefix.push_back(v);
    if (!forbidden_ending_here(prefix)) {
      used[static_cast<std::size_t>(v)] = true;
      extend(prefix, used, n, out);
      used[static_cast<std::size_t>(v)] = false;
    }
    prefix.pop_back();
  }
}

// Order-preserving relabelling onto 1..k.
Values reduce(std::span<const int> values) {
  Values sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  Values out;
  out.reserve(values.size());
  for (int v : values) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return out;
}

// Sizes of the indecomposable blocks, left to right.
std::vector<int> block_sizes(std::span<const int> values) {
  std::vector<int> sizes;
  int max_so_far = 0;
  int start = 0;
  for (int j = 0; j < static_cast<int>(values.size()); ++j) {
    max_so_far = std::max(max_so_far, values[static_cast<std::size_t>(j)]);
    // values are a rearrangement of 1..n, so the prefix is [j+1] iff its max is j+1
    if (max_so_far == j + 1) {
      sizes.push_back(j + 1 - start);
      start = j + 1;
    }
  }
  return sizes;
}

int blocks_of(std::span<const int> values) { return static_cast<int>(block_sizes(reduce(values)).size()); }

// Total size of the last `count` blocks.
int tail_size(const std::vector<int>& sizes, int count) {
  assert(count <= static_cast<int>(sizes.size()));
  return std::accumulate(sizes.end() - count, sizes.end(), 0);
}

}  // namespace

bool perm_contains(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return false;
  std::vector<std::size_t> chosen;
  chosen.reserve(pattern.values().size());
  return embed(p.values(), pattern.values(), chosen, 0);
}

bool is_avoider(const Permutation& p) {
  return !perm_contains(p, pattern_2341()) && !perm_contains(p, pattern_2431()) &&
         !perm_contains(p, pattern_3241());
}

std::vector<Permutation> gen_avoiders(int n, int guard) {
  check_guard(n, guard, "gen_avoiders");
  std::vector<Permutation> out;
  if (n < 0) return out;
  Values prefix;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  extend(prefix, used, n, out);
  return out;
}

Permutation perm_direct_sum(const Permutation& p1, const Permutation& p2) {
  Values v(p1.values().begin(), p1.values().end());
  for (int x : p2.values()) v.push_back(x + p1.size());
  return Permutation::trusted(std::move(v));
}

std::vector<Permutation> block_decompose(const Permutation& p) {
  std::vector<Permutation> out;
  auto v = p.values();
  int start = 0;
  for (int size : block_sizes(v)) {
    Values block;
    for (int i = start; i < start + size; ++i) block.push_back(v[static_cast<std::size_t>(i)] - start);
    out.push_back(Permutation::trusted(std::move(block)));
    start += size;
  }
  return out;
}

Permutation perm_compose(std::span<const Permutation> parts) {
  Permutation acc;
  for (const Permutation& part : parts) acc = perm_direct_sum(acc, part);
  return acc;
}

int block_count(const Permutation& p) { return static_cast<int>(block_sizes(p.values()).size()); }

int ascents(const Permutation& p) {
  auto v = p.values();
  int count = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) count += v[i] < v[i + 1];
  return count;
}

int critical_count(const Permutation& p) {
  auto v = p.values();
  const std::size_t n = v.size();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool critical = true;
    for (std::size_t j = 0; j < i && critical; ++j) {
      if (v[j] > v[i]) continue;
      for (std::size_t k = i + 1; k < n && critical; ++k) {
        if (v[k] < v[i] && v[j] > v[k]) critical = false;
      }
    }
    count += critical;
  }
  return count;
}

StatTriple perm_stats(const Permutation& p) {
  const int asc = ascents(p);
  return {block_count(p) - 1, asc, critical_count(p) - asc - 1};
}

ShapeData shape_analysis(const Permutation& p) {
  const int len = p.size();
  assert(len >= 2);
  const int n = len - 1;
  ShapeData s;
  for (int i = 1; i <= len; ++i) {
    if (p.at(i) == n + 1) s.x = i;
  }
  for (int i = 1; i < s.x; ++i) {
    if (p.at(i) > s.z) {
      s.z = p.at(i);
      s.y = i;
    }
  }
  s.w = n + 2;
  for (int i = s.x; i <= len; ++i) s.w = std::min(s.w, p.at(i));
  if (s.z == n) {
    s.shape = s.z < s.w ? ShapeCase::ZEqLt : ShapeCase::ZEqGt;
  } else {
    s.shape = s.z < s.w ? ShapeCase::ZLtLt : ShapeCase::ZLtGt;
  }
  return s;
}

bool shape_set_equalities_hold(const Permutation& p, const ShapeData& s) {
  const int n = p.size() - 1;
  // {pi(i) : lo <= i <= hi, i != skip} == {first, ..., first + count - 1}
  auto range_is = [&](int lo, int hi, int skip, int first, int last) {
    Values got;
    for (int i = lo; i <= hi; ++i) {
      if (i != skip) got.push_back(p.at(i));
    }
    std::sort(got.begin(), got.end());
    Values want;
    for (int v = first; v <= last; ++v) want.push_back(v);
    return got == want;
  };
  const int x = s.x, y = s.y, z = s.z, w = s.w;
  if (!(x - 1 <= z && z <= n && x - 1 <= w && w <= x)) return false;
  switch (s.shape) {
    case ShapeCase::ZEqLt:
      return x == n + 1 && w == n + 1 && range_is(1, n, y, 1, n - 1);
    case ShapeCase::ZLtLt:
      return x >= 1 && x <= n && z == x - 1 && w == x && range_is(1, x - 1, y, 1, x - 2) &&
             range_is(x + 1, n + 1, -1, x, n);
    case ShapeCase::ZEqGt:
      return x >= 2 && x <= n && w == x - 1 && range_is(1, x - 1, y, 1, x - 2) &&
             range_is(x + 1, n + 1, -1, x - 1, n - 1);
    case ShapeCase::ZLtGt:
      return x >= 2 && x <= n - 1 && x - 1 < z && z < n && w == x - 1 &&
             range_is(1, x - 1, y, 1, x - 2) && range_is(x + 1, z + 1, -1, x - 1, z - 1) &&
             range_is(z + 2, n + 1, -1, z + 1, n);
  }
  return false;
}

FPath phi_S(const Permutation& p, bool check) {
  if (check && !is_avoider(p)) throw Error(ErrorKind::NotAvoider, render_perm(p));
  std::vector<FStep> reversed;
  Values cur(p.values().begin(), p.values().end());
  while (cur.size() > 1) {
    const Permutation pi = Permutation::trusted(cur);
    const ShapeData s = shape_analysis(pi);
    const int n = pi.size() - 1;
    const int x = s.x, y = s.y, z = s.z;
    Values hat(static_cast<std::size_t>(n));
    auto at = [&](int i) -> int& { return hat[static_cast<std::size_t>(i - 1)]; };
    switch (s.shape) {
      case ShapeCase::ZEqLt:
        for (int i = 1; i <= n; ++i) at(i) = pi.at(i);
        reversed.push_back(kNorth);
        break;
      case ShapeCase::ZLtLt: {
        for (int i = 1; i <= x - 1; ++i) at(i) = pi.at(i);
        for (int i = x; i <= n; ++i) at(i) = pi.at(i + 1);
        const int tau = blocks_of(std::span<const int>(hat).subspan(static_cast<std::size_t>(x - 1)));
        reversed.push_back({1, 2 - tau});
        break;
      }
      case ShapeCase::ZEqGt: {
        for (int i = 1; i <= x - 1; ++i) at(i) = i == y ? x - 1 : pi.at(i);
        for (int i = x; i <= n; ++i) at(i) = pi.at(i + 1) + 1;
        const int omega = blocks_of(std::span<const int>(hat).subspan(static_cast<std::size_t>(x - 1)));
        reversed.push_back({1 + omega, 1});
        break;
      }
      case ShapeCase::ZLtGt: {
        for (int i = 1; i <= x - 1; ++i) at(i) = i == y ? x - 1 : pi.at(i);
        for (int i = x; i <= z; ++i) at(i) = pi.at(i + 1) + 1;
        for (int i = z + 1; i <= n; ++i) at(i) = pi.at(i + 1);
        std::span<const int> view(hat);
        const int omega = blocks_of(view.subspan(static_cast<std::size_t>(x - 1),
                                                 static_cast<std::size_t>(z - x + 1)));
        const int tau = blocks_of(view.subspan(static_cast<std::size_t>(z)));
        reversed.push_back({1 + omega, 1 - tau});
        break;
      }
    }
    if (check && !is_avoider(Permutation::trusted(hat))) {
      throw Error(ErrorKind::NotAvoider, render_perm(Permutation::trusted(hat)));
    }
    cur = std::move(hat);
  }
  return FPath::trusted(std::vector<FStep>(reversed.rbegin(), reversed.rend()));
}

Permutation psi_S(const FPath& q) {
  Values hat{1};
  for (const FStep& step : q.steps()) {
    const int n = static_cast<int>(hat.size());
    const std::vector<int> sizes = block_sizes(hat);
    Values pi(static_cast<std::size_t>(n + 1));
    auto at = [&](int i) -> int& { return pi[static_cast<std::size_t>(i - 1)]; };
    auto hat_at = [&](int i) { return hat[static_cast<std::size_t>(i - 1)]; };
    if (step.is_north()) {
      for (int i = 1; i <= n; ++i) at(i) = hat_at(i);
      at(n + 1) = n + 1;
    } else if (step.dx == 1) {
      const int j = 1 - step.dy;
      const int x = n - tail_size(sizes, j + 1) + 1;
      for (int i = 1; i <= x - 1; ++i) at(i) = hat_at(i);
      at(x) = n + 1;
      for (int i = x + 1; i <= n + 1; ++i) at(i) = hat_at(i - 1);
    } else {
      const int k = step.dx - 2;
      const int j = step.dy == 1 ? -1 : -step.dy;  // -1: no tau
      const int tau = j < 0 ? 0 : tail_size(sizes, j + 1);
      const int omega = tail_size(sizes, k + 1 + (j < 0 ? 0 : j + 1)) - tau;
      const int x = n - tau - omega + 1;
      const int z = n - tau;
      int y = 0;
      for (int i = 1; i <= n; ++i) {
        if (hat_at(i) == x - 1) y = i;
      }
      for (int i = 1; i <= x - 1; ++i) at(i) = hat_at(i);
      at(y) = z;
      at(x) = n + 1;
      for (int i = x + 1; i <= z + 1; ++i) at(i) = hat_at(i - 1) - 1;
      for (int i = z + 2; i <= n + 1; ++i) at(i) = hat_at(i - 1);
    }
    hat = std::move(pi);
  }
  return Permutation::trusted(std::move(hat));
}

std::string render_perm(const Permutation& p) {
  std::string out;
  for (int v : p.values()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Permutation parse_perm(const std::string& text) {
  Values values;
  // Without separators, "2413" is read one digit per entry.
  const bool separated = text.find_first_of(" ,") != std::string::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] < '0' || text[i] > '9') throw Error(ErrorKind::ParseError, "expected a digit", i);
    if (!separated) {
      values.push_back(text[i++] - '0');
      continue;
    }
    const std::size_t start = i;
    int v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw Error(ErrorKind::ParseError, "value too large", start);
      ++i;
    }
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorKind::ParseError, "empty input", 0);
  return Permutation::from_values(std::move(values));
}

}  // namespace fpaths
