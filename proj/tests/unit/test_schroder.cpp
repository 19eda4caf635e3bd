#include <doctest.h>

#include <algorithm>

#include "expect_error.hpp"
#include "fpaths/schroder.hpp"
#include "oracles.hpp"

using namespace fpaths;

namespace {

SchroderWord w(const std::string& s) { return parse_schroder(s.empty() ? "-" : s); }

// comp, hdd, peak straight from the letters.
StatTriple naive_stats(const std::string& s) {
  StatTriple t;
  int y = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'h') {
      t.l += 1;
      if (y == 0) t.h += 1;
    }
    if (i + 1 < s.size() && s[i] == 'd' && s[i + 1] == 'd') t.l += 1;
    if (i + 1 < s.size() && s[i] == 'u' && s[i + 1] == 'd') t.a1 += 1;
    y += s[i] == 'u' ? 1 : s[i] == 'd' ? -1 : 0;
  }
  return t;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(w("uudd").semilength() == 2);
  CHECK(w("").empty());
  expect_error([] { w("uuuddd"); }, ErrorKind::TripleDescent, 3);
  expect_error([] { w("udd"); }, ErrorKind::BelowAxis, 2);
  expect_error([] { w("d"); }, ErrorKind::BelowAxis, 0);
  expect_error([] { w("uh"); }, ErrorKind::NotClosed);
  expect_error([] { parse_schroder("uxd"); }, ErrorKind::ParseError, 1);
  expect_error([] { parse_schroder(""); }, ErrorKind::ParseError, 0);
}

TEST_CASE("statistics") {
  CHECK(schroder_stats(w("uhd")) == StatTriple{0, 1, 0});
  CHECK(schroder_stats(w("hh")) == StatTriple{2, 2, 0});
  CHECK(schroder_stats(w("udud")) == StatTriple{0, 0, 2});
  for (int n = 0; n <= 5; ++n) {
    for (const auto& s : gen_schroder(n)) CHECK(schroder_stats(s) == naive_stats(render_schroder(s) == "-" ? "" : render_schroder(s)));
  }
}

TEST_CASE("bijection") {
  CHECK(phi_P(w("uudd")) == parse_fpath("0,1 1,0"));
  CHECK(phi_P(w("")).empty());
  CHECK(phi_P(w("hh")) == parse_fpath("0,1 0,1"));
  CHECK(psi_P(FPath{}).empty());
  CHECK(render_schroder(psi_P(parse_fpath("0,1 1,0"))) == "uudd");
  const FPath q = parse_fpath("0,1 0,1 0,1 0,1 0,1 0,1 3,-1 0,1 0,1 0,1 1,1 2,1 0,1 0,1 1,-1");
  CHECK(render_schroder(psi_P(q)) == "hhuhuhhddhhuudhduhudd");
  for (int n = 0; n <= 6; ++n) {
    for (const auto& s : gen_schroder(n)) {
      const FPath q2 = phi_P(s);
      CHECK(static_cast<int>(q2.size()) == n);
      CHECK(psi_P(q2) == s);
      CHECK(fpath_stats(q2).triple == schroder_stats(s));
    }
  }
}

TEST_CASE("suffix classes") {
  CHECK(schroder_suffix(w("hh")) == SchroderSuffix::H);
  CHECK(schroder_suffix(w("udud")) == SchroderSuffix::UD);
  CHECK(schroder_suffix(w("uhd")) == SchroderSuffix::HD);
  CHECK(schroder_suffix(w("uudd")) == SchroderSuffix::UDD);
  CHECK(schroder_suffix(w("uuhdd")) == SchroderSuffix::HDD);
}

TEST_CASE("generation matches the brute-force filter") {
  CHECK(gen_schroder(0).size() == 1);
  CHECK(gen_schroder(2).size() == 6);
  CHECK(gen_schroder(3).size() == 21);
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::string> got;
    for (const auto& s : gen_schroder(n)) got.push_back(render_schroder(s) == "-" ? "" : render_schroder(s));
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::schroder(n));
  }
  expect_error([] { gen_schroder(11); }, ErrorKind::GuardExceeded);
}

TEST_CASE("direct sum") {
  CHECK(render_schroder(schroder_direct_sum(w(""), w(""))) == "h");
  CHECK(render_schroder(schroder_direct_sum(w("uudd"), w(""))) == "uuddh");
  CHECK(render_schroder(schroder_direct_sum(w(""), w("udud"))) == "hudud");
  for (const auto& a : gen_schroder(2)) {
    for (const auto& b : gen_schroder(2)) {
      CHECK(phi_P(schroder_direct_sum(a, b)) == fpath_direct_sum(phi_P(a), phi_P(b)));
    }
  }
}

TEST_CASE("text form") {
  CHECK(render_schroder(w("")) == "-");
  for (const auto& s : gen_schroder(4)) CHECK(parse_schroder(render_schroder(s)) == s);
}
