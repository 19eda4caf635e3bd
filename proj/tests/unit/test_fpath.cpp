#include <doctest.h>

#include <algorithm>
#include <set>

#include "fpaths/error.hpp"
#include "fpaths/fpath.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace fpaths;

namespace {

FPath path(std::vector<std::pair<int, int>> steps) { return validate_fpath(steps); }

oracle::Path raw(const FPath& q) {
  oracle::Path out;
  for (const FStep& s : q.steps()) out.push_back({s.dx, s.dy});
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(path({{0, 1}, {1, 0}}).size() == 2);
  CHECK(path({}).empty());
  expect_error([] { path({{2, 1}, {0, 1}}); }, ErrorKind::PrefixViolation, 1);
  expect_error([] { path({{0, 1}, {0, 1}, {3, 0}}); }, ErrorKind::PrefixViolation, 3);
  expect_error([] { path({{0, 1}, {1, 2}}); }, ErrorKind::StepNotInF, 2);
  expect_error([] { path({{0, 0}}); }, ErrorKind::StepNotInF, 1);
  expect_error([] { path({{0, -1}}); }, ErrorKind::StepNotInF, 1);
}

TEST_CASE("statistics") {
  auto s = fpath_stats(path({{0, 1}, {1, 1}}));
  CHECK(s.triple == StatTriple{1, 1, 1});
  CHECK(s.bone == 2);
  CHECK(fpath_stats(FPath{}).triple == StatTriple{});
  CHECK(fpath_stats(FPath{}).bone == 0);
  const FPath q = parse_fpath("0,1 0,1 0,1 0,1 0,1 0,1 3,-1 0,1 0,1 0,1 1,1 2,1 0,1 0,1 1,-1");
  CHECK(q.height() == 4);
  CHECK(fpath_stats(q).triple.h == 4);
}

TEST_CASE("statistics agree with direct counts") {
  for (int n = 0; n <= 5; ++n) {
    for (const FPath& q : gen_fpaths(n)) {
      int north = 0, aone = 0, bone = 0;
      for (const FStep& s : q.steps()) {
        north += s.is_north();
        aone += s.dx == 1;
        bone += s.dy == 1;
      }
      const auto st = fpath_stats(q);
      CHECK(st.triple == StatTriple{oracle::height_of(raw(q)), north, aone});
      CHECK(st.bone == bone);
      CHECK(st.triple.h <= st.triple.l);
      CHECK(st.triple.l <= st.bone);
    }
  }
}

TEST_CASE("involution") {
  CHECK(involution_phi_F(path({{0, 1}, {1, 0}})) == path({{0, 1}, {2, 1}}));
  CHECK(involution_phi_F(path({{0, 1}, {0, 1}, {0, 1}})) == path({{0, 1}, {0, 1}, {0, 1}}));
  CHECK(involution_phi_F(path({{1, 1}, {1, 1}})) == path({{1, 1}, {1, 1}}));
  for (int n = 0; n <= 6; ++n) {
    for (const FPath& q : gen_fpaths(n)) {
      const FPath r = involution_phi_F(q);
      CHECK_NOTHROW(FPath::from_steps({r.steps().begin(), r.steps().end()}));
      CHECK(involution_phi_F(r) == q);
      const auto a = fpath_stats(q);
      const auto b = fpath_stats(r);
      CHECK(b.triple.h == a.triple.h);
      CHECK(b.triple.l == a.triple.l);
      CHECK(b.triple.a1 == a.bone - a.triple.l);
      CHECK(b.bone == a.triple.a1 + a.triple.l);
    }
  }
}

TEST_CASE("generation matches the brute-force enumerator") {
  CHECK(gen_fpaths(0).size() == 1);
  CHECK(gen_fpaths(2).size() == 6);
  CHECK(gen_fpaths(3).size() == 21);
  for (int n = 0; n <= 6; ++n) {
    std::set<oracle::Path> expected;
    for (const auto& p : oracle::fpaths(n)) expected.insert(p);
    std::set<oracle::Path> got;
    const auto paths = gen_fpaths(n);
    for (const FPath& q : paths) got.insert(raw(q));
    CHECK(got.size() == paths.size());
    CHECK(got == expected);
    CHECK(std::is_sorted(paths.begin(), paths.end(),
                         [](const FPath& a, const FPath& b) { return canonical_order(a, b) < 0; }));
  }
  expect_error([] { gen_fpaths(11); }, ErrorKind::GuardExceeded);
  CHECK(gen_fpaths(4, 4).size() == 80);
}

TEST_CASE("direct sum and height decomposition") {
  CHECK(fpath_direct_sum(FPath{}, FPath{}) == path({{0, 1}}));
  CHECK(fpath_direct_sum(path({{1, 1}, {1, 1}}), FPath{}) == path({{1, 1}, {1, 1}, {0, 1}}));
  CHECK(fpath_direct_sum(FPath{}, path({{0, 1}, {1, 0}})) == path({{0, 1}, {0, 1}, {1, 0}}));

  const auto all_north = fpath_decompose(path({{0, 1}, {0, 1}}));
  CHECK(all_north == std::vector<FPath>(3));
  CHECK(fpath_decompose(path({{1, 1}, {1, 1}})) == std::vector<FPath>{path({{1, 1}, {1, 1}})});

  const FPath q = parse_fpath("0,1 0,1 0,1 0,1 0,1 0,1 3,-1 0,1 0,1 0,1 1,1 2,1 0,1 0,1 1,-1");
  const auto parts = fpath_decompose(q);
  REQUIRE(parts.size() == 5);
  CHECK(parts[0].empty());
  CHECK(parts[1].empty());
  CHECK(parts[3].empty());
  CHECK(parts[2] == parse_fpath("0,1 0,1 0,1 0,1 3,-1"));
  CHECK(parts[4] == parse_fpath("0,1 1,1 2,1 0,1 0,1 1,-1"));

  for (int n = 0; n <= 6; ++n) {
    for (const FPath& q2 : gen_fpaths(n)) {
      const auto comps = fpath_decompose(q2);
      CHECK(static_cast<int>(comps.size()) == q2.height() + 1);
      for (const FPath& c : comps) CHECK(c.height() == 0);
      CHECK(fpath_compose(comps) == q2);
    }
  }
}

TEST_CASE("text form") {
  CHECK(render_fpath(FPath{}) == "-");
  CHECK(parse_fpath("-").empty());
  const FPath q = parse_fpath("0,1 0,1 0,1 0,1 3,-1");
  CHECK(q.size() == 5);
  CHECK(q[4] == FStep{3, -1});
  CHECK(q.height() == 0);
  CHECK(render_fpath(q) == "0,1 0,1 0,1 0,1 3,-1");
  expect_error([] { parse_fpath("0,1 3,-1"); }, ErrorKind::PrefixViolation, 2);
  expect_error([] { parse_fpath(""); }, ErrorKind::ParseError, 0);
  expect_error([] { parse_fpath("0,1  1,0"); }, ErrorKind::ParseError, 4);
  expect_error([] { parse_fpath("0;1"); }, ErrorKind::ParseError, 1);
  expect_error([] { parse_fpath("0,1 x,0"); }, ErrorKind::ParseError, 4);
  expect_error([] { parse_fpath("2,1"); }, ErrorKind::PrefixViolation, 1);
  for (const FPath& p : gen_fpaths(4)) CHECK(parse_fpath(render_fpath(p)) == p);
}
