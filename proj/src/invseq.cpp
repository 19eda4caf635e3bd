#include "fpaths/invseq.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "fpaths/error.hpp"

namespace fpaths {

using Entries = std::vector<int>;

const char* to_string(InvFamily family) {
  switch (family) {
    case InvFamily::I_101_102: return "I";
    case InvFamily::J_101_021: return "J";
    case InvFamily::Untagged: return "untagged";
  }
  return "?";
}

namespace {

const Entries k101{1, 0, 1};
const Entries k102{1, 0, 2};
const Entries k021{0, 2, 1};

int sign(int v) { return (v > 0) - (v < 0); }

bool embed(std::span<const int> e, std::span<const int> pattern, std::vector<std::size_t>& chosen,
           std::size_t from) {
  const std::size_t k = chosen.size();
  if (k == pattern.size()) return true;
  const std::size_t needed = pattern.size() - k;
  for (std::size_t i = from; i + needed <= e.size(); ++i) {
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      ok = sign(e[i] - e[chosen[t]]) == sign(pattern[k] - pattern[t]);
    }
    if (!ok) continue;
    chosen.push_back(i);
    if (embed(e, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

// True when some occurrence of a family pattern ends at the last entry.
bool bad_ending_here(const Entries& e, InvFamily family) {
  if (family == InvFamily::Untagged || e.size() < 3) return false;
  const int c = e.back();
  for (std::size_t a = 0; a + 2 < e.size(); ++a) {
    for (std::size_t b = a + 1; b + 1 < e.size(); ++b) {
      const int ea = e[a], eb = e[b];
      if (ea == c && eb < c) return true;  // 101
      if (family == InvFamily::I_101_102 && eb < ea && ea < c) return true;
      if (family == InvFamily::J_101_021 && ea < c && c < eb) return true;
    }
  }
  return false;
}

void extend(Entries& prefix, int n, InvFamily family, std::vector<InvSeq>& out) {
  const int len = static_cast<int>(prefix.size());
  if (len == n) {
    out.push_back(InvSeq::trusted(prefix, family));
    return;
  }
  for (int v = 0; v <= len; ++v) {
    prefix.push_back(v);
    if (!bad_ending_here(prefix, family)) extend(prefix, n, family, out);
    prefix.pop_back();
  }
}

// omi over [L-1]
int omi(std::span<const int> e) {
  const int l = static_cast<int>(e.size());
  int count = 0;
  for (int i = 1; i <= l - 1; ++i) {
    if (std::find(e.begin(), e.end(), i) == e.end()) ++count;
  }
  return count;
}

std::vector<bool> occurs(std::span<const int> e) {
  std::vector<bool> seen(e.size() + 1, false);
  for (int v : e) seen[static_cast<std::size_t>(v)] = true;
  return seen;
}

}  // namespace

InvSeq InvSeq::from_entries(Entries entries, InvFamily family) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] > static_cast<int>(i)) {
      throw Error(ErrorKind::NotInversionSequence,
                  "entry " + std::to_string(entries[i]) + " at position " + std::to_string(i + 1), i);
    }
  }
  if (!avoids_family(entries, family)) {
    throw Error(ErrorKind::NotAvoider, std::string("sequence contains a pattern of family ") +
                                           to_string(family));
  }
  return InvSeq(std::move(entries), family);
}

Entries word_reduction(std::span<const int> w) {
  Entries sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Entries out;
  out.reserve(w.size());
  for (int v : w) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  }
  return out;
}

bool invseq_contains(std::span<const int> e, std::span<const int> pattern) {
  if (pattern.size() > e.size()) return false;
  std::vector<std::size_t> chosen;
  return embed(e, pattern, chosen, 0);
}

bool invseq_contains(const InvSeq& e, std::span<const int> pattern) {
  return invseq_contains(e.entries(), pattern);
}

bool avoids_family(std::span<const int> e, InvFamily family) {
  switch (family) {
    case InvFamily::I_101_102: return !invseq_contains(e, k101) && !invseq_contains(e, k102);
    case InvFamily::J_101_021: return !invseq_contains(e, k101) && !invseq_contains(e, k021);
    case InvFamily::Untagged: return true;
  }
  return true;
}

MaxInfo max_and_maxid(const InvSeq& e) {
  assert(!e.empty());
  MaxInfo m{e.at(1), 1};
  for (int i = 2; i <= e.size(); ++i) {
    if (e.at(i) >= m.max) m = {e.at(i), i};
  }
  return m;
}

StatTriple stats_I(const InvSeq& e) {
  const MaxInfo m = max_and_maxid(e);
  const auto seen = occurs(e.entries());
  int cons = 0;
  for (int i = 1; i <= e.size() - 1; ++i) {
    cons += seen[static_cast<std::size_t>(i - 1)] && seen[static_cast<std::size_t>(i)];
  }
  return {m.maxid - m.max - 1, omi(e.entries()), cons};
}

FPath phi_I(const InvSeq& e, bool check) {
  if (check && !avoids_family(e.entries(), InvFamily::I_101_102)) {
    throw Error(ErrorKind::NotAvoider, "sequence contains 101 or 102");
  }
  std::vector<FStep> reversed;
  InvSeq cur = e;
  while (cur.size() > 1) {
    const MaxInfo m = max_and_maxid(cur);
    Entries hat(cur.entries().begin(), cur.entries().end());
    hat.erase(hat.begin() + (m.maxid - 1));
    InvSeq next = InvSeq::trusted(std::move(hat), cur.family());
    const MaxInfo mh = max_and_maxid(next);
    reversed.push_back({m.max - mh.max, m.maxid - mh.maxid});
    cur = std::move(next);
  }
  return FPath::trusted(std::vector<FStep>(reversed.rbegin(), reversed.rend()));
}

InvSeq psi_I(const FPath& q) {
  Entries e{0};
  int max = 0;
  int maxid = 1;
  for (const FStep& s : q.steps()) {
    max += s.dx;
    maxid += s.dy;
    // The new entry sits at 1-based position maxid and must stay below it.
    assert(max < maxid && maxid >= 1 && maxid <= static_cast<int>(e.size()) + 1);
    e.insert(e.begin() + (maxid - 1), max);
  }
  return InvSeq::trusted(std::move(e), InvFamily::I_101_102);
}

int first_of(const InvSeq& j) {
  int count = 0;
  while (count < j.size() && j.at(count + 1) == 0) ++count;
  return count;
}

StatTriple stats_J(const InvSeq& j) {
  std::map<int, int> multiplicity;
  for (int v : j.entries()) {
    if (v > 0) ++multiplicity[v];
  }
  int single = 0;
  for (const auto& [value, count] : multiplicity) single += count == 1;
  return {first_of(j) - 1, omi(j.entries()), single};
}

FPath phi_J(const InvSeq& j) {
  const int n = j.size() - 1;
  auto e = j.entries();
  std::vector<FStep> steps(static_cast<std::size_t>(std::max(n, 0)), kNorth);
  std::size_t i = static_cast<std::size_t>(first_of(j));
  int last_value = 0;
  while (i < e.size()) {
    const int v = e[i];
    if (v <= last_value) throw Error(ErrorKind::FormViolation, "positive entries must form increasing runs", i);
    int a = 0;
    while (i < e.size() && e[i] == v) ++a, ++i;
    int zeros = 0;
    while (i < e.size() && e[i] == 0) ++zeros, ++i;
    if (v > n) throw Error(ErrorKind::FormViolation, "value exceeds length - 1", i);
    steps[static_cast<std::size_t>(n - v)] = {a, 1 - zeros};
    last_value = v;
  }
  return FPath::trusted(std::move(steps));
}

InvSeq psi_J(const FPath& q) {
  const int n = static_cast<int>(q.size());
  Entries e(static_cast<std::size_t>(q.height() + 1), 0);
  for (int i = n; i >= 1; --i) {
    const FStep& s = q[static_cast<std::size_t>(i - 1)];
    e.insert(e.end(), static_cast<std::size_t>(s.dx), n - i + 1);
    e.insert(e.end(), static_cast<std::size_t>(1 - s.dy), 0);
  }
  return InvSeq::trusted(std::move(e), InvFamily::J_101_021);
}

std::vector<InvSeq> gen_invseq(int n, InvFamily family, int guard) {
  check_guard(n, guard, "gen_invseq");
  std::vector<InvSeq> out;
  if (n < 0) return out;
  Entries prefix;
  extend(prefix, n, family, out);
  return out;
}

InvSeq dsum_I(const InvSeq& e, const InvSeq& f) {
  if (e.empty()) return f;
  if (f.empty()) return e;
  const MaxInfo m = max_and_maxid(e);
  Entries g(e.entries().begin(), e.entries().begin() + m.maxid);
  for (int v : f.entries()) g.push_back(v + m.max);
  g.insert(g.end(), e.entries().begin() + m.maxid, e.entries().end());
  return InvSeq::trusted(std::move(g), InvFamily::I_101_102);
}

std::vector<InvSeq> decompose_I(const InvSeq& g) {
  std::vector<InvSeq> reversed;
  InvSeq cur = g;
  while (!cur.empty()) {
    const MaxInfo m = max_and_maxid(cur);
    if (m.maxid == m.max + 1) {
      reversed.push_back(cur);
      break;
    }
    const int target = m.maxid - m.max - 1;
    int k = 0;
    for (int i = 1; i <= cur.size(); ++i) {
      if (i - cur.at(i) == target) k = i;
    }
    assert(k >= 1 && k < cur.size());
    const int base = cur.at(k + 1);
    int len = 1;
    while (k + len + 1 <= cur.size() && cur.at(k + len + 1) >= base) ++len;
    Entries f;
    for (int i = k + 1; i <= k + len; ++i) f.push_back(cur.at(i) - base);
    Entries e(cur.entries().begin(), cur.entries().begin() + k);
    e.insert(e.end(), cur.entries().begin() + k + len, cur.entries().end());
    reversed.push_back(InvSeq::trusted(std::move(f), InvFamily::I_101_102));
    cur = InvSeq::trusted(std::move(e), InvFamily::I_101_102);
  }
  return {reversed.rbegin(), reversed.rend()};
}

InvSeq dsum_J(const InvSeq& e, const InvSeq& f) {
  if (e.empty()) return f;
  if (f.empty()) return e;
  const int k = first_of(e);
  const int m = f.size();
  Entries g(e.entries().begin(), e.entries().begin() + k);
  g.insert(g.end(), f.entries().begin(), f.entries().end());
  for (int i = k + 1; i <= e.size(); ++i) g.push_back(e.at(i) > 0 ? e.at(i) + m : 0);
  return InvSeq::trusted(std::move(g), InvFamily::J_101_021);
}

std::vector<InvSeq> decompose_J(const InvSeq& g) {
  std::vector<InvSeq> reversed;
  InvSeq cur = g;
  while (!cur.empty()) {
    const int r = first_of(cur);
    if (r == 1) {
      reversed.push_back(cur);
      break;
    }
    const int len = cur.size();
    int m = 1;
    while (r + m <= len && cur.at(r + m) < m + 1) ++m;
    // r + m > len: the component runs to the end
    m = std::min(m, len - r + 1);
    Entries f(cur.entries().begin() + (r - 1), cur.entries().begin() + (r - 1 + m));
    Entries e(cur.entries().begin(), cur.entries().begin() + (r - 1));
    for (int i = r + m; i <= len; ++i) e.push_back(cur.at(i) > 0 ? cur.at(i) - m : 0);
    reversed.push_back(InvSeq::trusted(std::move(f), InvFamily::J_101_021));
    cur = InvSeq::trusted(std::move(e), InvFamily::J_101_021);
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::string render_invseq(const InvSeq& e) {
  std::string out;
  for (int v : e.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

InvSeq parse_invseq(const std::string& text, InvFamily family) {
  Entries entries;
  const bool separated = text.find_first_of(", ") != std::string::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] < '0' || text[i] > '9') throw Error(ErrorKind::ParseError, "expected a digit", i);
    if (!separated) {
      // "0100445": one digit per entry
      entries.push_back(text[i] - '0');
      ++i;
      continue;
    }
    const std::size_t start = i;
    int v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw Error(ErrorKind::ParseError, "value too large", start);
      ++i;
    }
    entries.push_back(v);
  }
  if (entries.empty()) throw Error(ErrorKind::ParseError, "empty input", 0);
  return InvSeq::from_entries(std::move(entries), family);
}

}  // namespace fpaths
