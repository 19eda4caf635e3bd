#include <doctest.h>

#include <functional>
#include <set>

#include "expect_error.hpp"
#include "fpaths/wtree.hpp"
#include "oracles.hpp"

using namespace fpaths;

namespace {

WTree t(const std::string& s) { return parse_wtree(s); }

const WNode kLeaf{};

struct Naive {
  int leaves = 0;
  int ones = 0;
};

void walk(const WNode& v, Naive& acc) {
  if (v.is_leaf()) ++acc.leaves;
  acc.ones += v.weight == 1;
  for (const WNode& c : v.children) walk(c, acc);
}

}  // namespace

TEST_CASE("validation") {
  CHECK(t("[(2 L L)]").edges() == 3);
  CHECK(t("[L]").edges() == 1);
  expect_error([] { t("[(3 L L)]"); }, ErrorKind::WeightOutOfRange, 1);
  expect_error([] { t("[L (0 L)]"); }, ErrorKind::WeightOutOfRange, 2);
  expect_error([] { WTree::from_subtrees({}); }, ErrorKind::EmptyTree);
  expect_error([] { WTree::from_subtrees({kLeaf, WNode{1, {}}}); }, ErrorKind::WeightOnLeafOrRoot, 2);
  expect_error([] { parse_wtree("[(1 L L"); }, ErrorKind::ParseError, 7);
  expect_error([] { parse_wtree("[(L)]"); }, ErrorKind::ParseError, 2);
  expect_error([] { parse_wtree("[(1)]"); }, ErrorKind::ParseError, 3);
  expect_error([] { parse_wtree("[L] x"); }, ErrorKind::ParseError, 4);
  expect_error([] { parse_wtree("[]"); }, ErrorKind::EmptyTree);
}

TEST_CASE("preorder") {
  const auto v = preorder(t("[(1 L) L]"));
  REQUIRE(v.size() == 4);
  CHECK(v[0].parent == -1);
  CHECK(v[1].parent == 0);
  CHECK(v[1].weight == 1);
  CHECK(v[1].first_child);
  CHECK(v[2].parent == 1);
  CHECK(v[3].parent == 0);
  CHECK_FALSE(v[3].first_child);
  CHECK(preorder(t("[L]")).size() == 2);
  const auto star = preorder(t("[L L L]"));
  REQUIRE(star.size() == 4);
  CHECK(star[0].degree == 3);
}

TEST_CASE("statistics") {
  CHECK(wtree_stats(t("[L L L]")) == StatTriple{2, 2, 0});
  CHECK(wtree_stats(t("[(1 (1 L))]")) == StatTriple{0, 0, 2});
  CHECK(wtree_stats(t("[L]")) == StatTriple{});
  for (int e = 1; e <= 6; ++e) {
    for (const WTree& w : gen_wtrees(e)) {
      Naive acc;
      for (const WNode& c : w.subtrees()) walk(c, acc);
      CHECK(wtree_stats(w) == StatTriple{w.root_degree() - 1, acc.leaves - 1, acc.ones});
    }
  }
}

TEST_CASE("bijection") {
  CHECK(phi_T(t("[L]")).empty());
  CHECK(phi_T(t("[(1 L L)]")) == parse_fpath("0,1 1,0"));
  CHECK(phi_T(t("[L (1 L)]")) == parse_fpath("1,1 0,1"));
  CHECK(render_wtree(psi_T(FPath{})) == "[L]");
  CHECK(render_wtree(psi_T(parse_fpath("1,1 1,1"))) == "[(1 (1 L))]");
  const FPath q = parse_fpath("0,1 0,1 0,1 0,1 0,1 0,1 3,-1 0,1 0,1 0,1 1,1 2,1 0,1 0,1 1,-1");
  CHECK(render_wtree(psi_T(q)) == "[(1 L L (2 (1 L) L)) L (3 L L L L L) L L]");
  for (int n = 0; n <= 6; ++n) {
    for (const WTree& w : gen_wtrees(n + 1)) {
      const FPath r = phi_T(w);
      CHECK(static_cast<int>(r.size()) == n);
      CHECK(psi_T(r) == w);
      CHECK(fpath_stats(r).triple == wtree_stats(w));
    }
  }
}

TEST_CASE("generation matches the weighted count") {
  CHECK(gen_wtrees(1).size() == 1);
  CHECK(gen_wtrees(3).size() == 6);
  CHECK(gen_wtrees(4).size() == 21);
  for (int e = 1; e <= 7; ++e) {
    const auto trees = gen_wtrees(e);
    CHECK(static_cast<long long>(trees.size()) == oracle::wtree_count(e));
    std::set<std::string> distinct;
    for (const WTree& w : trees) {
      CHECK(w.edges() == e);
      CHECK_NOTHROW(validate_wtree(w.subtrees()));
      distinct.insert(render_wtree(w));
    }
    CHECK(distinct.size() == trees.size());
  }
  expect_error([] { gen_wtrees(12); }, ErrorKind::GuardExceeded);
}

TEST_CASE("direct sum") {
  CHECK(render_wtree(wtree_direct_sum(t("[L]"), t("[L]"))) == "[L L]");
  CHECK(render_wtree(wtree_direct_sum(t("[(1 L L)]"), t("[L]"))) == "[L (1 L L)]");
  CHECK(render_wtree(wtree_direct_sum(t("[L]"), t("[(1 (1 L))]"))) == "[(1 (1 L)) L]");
  for (const WTree& a : gen_wtrees(3)) {
    for (const WTree& b : gen_wtrees(3)) {
      CHECK(phi_T(wtree_direct_sum(a, b)) == fpath_direct_sum(phi_T(a), phi_T(b)));
    }
  }
}

TEST_CASE("text form") {
  CHECK(render_wtree(t("  [ (1  L L) ]")) == "[(1 L L)]");
  for (const WTree& w : gen_wtrees(4)) CHECK(parse_wtree(render_wtree(w)) == w);
}
