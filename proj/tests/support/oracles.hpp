#pragma once

// Brute-force reference enumerators. Each one works from the raw definitions
// and shares no code with the library.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <regex>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Step = std::pair<int, int>;
using Path = std::vector<Step>;

// Every F-path of length n. A step (a,b) from height h keeps y - x >= 0
// exactly when a <= h + 1 and b >= a - h.
inline std::vector<Path> fpaths(int n) {
  std::vector<Path> out;
  Path cur;
  std::function<void(int)> rec = [&](int height) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    cur.push_back({0, 1});
    rec(height + 1);
    cur.pop_back();
    for (int a = 1; a <= height + 1; ++a) {
      for (int b = a - height; b <= 1; ++b) {
        cur.push_back({a, b});
        rec(height + b - a);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

inline int height_of(const Path& p) {
  int h = 0;
  for (auto [a, b] : p) h += b - a;
  return h;
}

// (i, j, k, l, m): steps (1,1), steps (1,b<=0), steps (a>=2,1), north, height.
inline std::array<int, 5> step_classes(const Path& p) {
  std::array<int, 5> s{};
  for (auto [a, b] : p) {
    if (a == 0) ++s[3];
    else if (a == 1 && b == 1) ++s[0];
    else if (a == 1) ++s[1];
    else if (b == 1) ++s[2];
  }
  s[4] = height_of(p);
  return s;
}

// Words over `alphabet` of the given length.
inline std::vector<std::string> words(const std::string& alphabet, int length) {
  std::vector<std::string> out{""};
  for (int i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char c : alphabet) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

// Schroder paths of semilength n with no ddd factor, u/d/h letters.
inline std::vector<std::string> schroder(int n) {
  std::vector<std::string> out;
  for (int len = n; len <= 2 * n; ++len) {
    for (const auto& w : words("udh", len)) {
      int x = 0, y = 0;
      bool ok = true;
      for (char c : w) {
        x += c == 'h' ? 2 : 1;
        y += c == 'u' ? 1 : c == 'd' ? -1 : 0;
        ok = ok && y >= 0;
      }
      if (ok && x == 2 * n && y == 0 && w.find("ddd") == std::string::npos) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dyck paths in u/r/b whose runs read u+ r* b+ ... u+ r*.
inline std::vector<std::string> bicolored(int semilength) {
  static const std::regex form("(u+r*b+)*u+r*");
  std::vector<std::string> out;
  for (const auto& w : words("urb", 2 * semilength)) {
    int y = 0;
    bool ok = true;
    for (char c : w) {
      y += c == 'u' ? 1 : -1;
      ok = ok && y >= 0;
    }
    if (ok && y == 0 && std::regex_match(w, form)) out.push_back(w);
  }
  return out;
}

inline std::vector<int> reduce(const std::vector<int>& w) {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  for (int v : w) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  return out;
}

// True when some subsequence of w reduces to pattern (pattern already reduced).
inline bool contains(const std::vector<int>& w, const std::vector<int>& pattern) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pattern.size());
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) if (pick[i]) sub.push_back(w[i]);
    if (reduce(sub) == pattern) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Permutations of 1..n avoiding 2341, 2431 and 3241, lexicographic.
inline std::vector<std::vector<int>> avoiders(int n) {
  const std::vector<std::vector<int>> pats{{1, 2, 3, 0}, {1, 3, 2, 0}, {2, 1, 3, 0}};
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (const auto& pat : pats) ok = ok && !contains(p, pat);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Inversion sequences of length n avoiding every pattern in pats, lexicographic.
inline std::vector<std::vector<int>> invseqs(int n, const std::vector<std::vector<int>>& pats) {
  std::vector<std::vector<int>> all{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& e : all) {
      for (int v = 0; v <= i; ++v) {
        auto f = e;
        f.push_back(v);
        next.push_back(std::move(f));
      }
    }
    all = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (const auto& e : all) {
    bool ok = true;
    for (const auto& pat : pats) ok = ok && !contains(e, pat);
    if (ok) out.push_back(e);
  }
  return out;
}

// Weighted ordered trees with e edges: a non-root interior vertex of outdegree
// d has d weight choices, so count subtrees hanging from an edge by size.
inline long long wtree_count(int edges) {
  // sub[e]: weighted subtrees (edge to parent included) with e edges.
  // seq[d][e]: ordered sequences of d subtrees with e edges in total.
  const int E = edges;
  std::vector<long long> sub(E + 1, 0);
  std::vector<std::vector<long long>> seq(E + 2, std::vector<long long>(E + 1, 0));
  seq[0][0] = 1;
  for (int e = 1; e <= E; ++e) {
    sub[e] = e == 1 ? 1 : 0;
    for (int d = 1; d <= e - 1; ++d) sub[e] += d * seq[d][e - 1];
    for (int d = 1; d <= e; ++d) {
      long long s = 0;
      for (int first = 1; first <= e; ++first) s += sub[first] * seq[d - 1][e - first];
      seq[d][e] = s;
    }
  }
  long long total = 0;
  for (int d = 1; d <= E; ++d) total += seq[d][E];
  return total;
}

inline long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
