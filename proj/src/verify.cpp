#include "fpaths/verify.hpp"

#include <array>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fpaths/counting.hpp"
#include "fpaths/error.hpp"
#include "fpaths/family.hpp"

namespace fpaths {

void VerifyReport::merge(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int VerifyReport::passed() const {
  int count = 0;
  for (const Check& c : checks) count += c.pass;
  return count;
}

int VerifyReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const Check& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.n >= 0) out << " n=" << c.n;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << passed() << " passed, " << failed() << " failed\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json r{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    r["n"] = c.n >= 0 ? nlohmann::json(c.n) : nlohmann::json(nullptr);
    r[c.pass ? "detail" : "counterexample"] = c.detail;
    records.push_back(std::move(r));
  }
  nlohmann::json doc{{"checks", records}, {"passed", passed()}, {"failed", failed()}};
  return doc.dump(2);
}

namespace {

Check make(std::string name, int n) { return Check{std::move(name), n, true, {}}; }

void fail(Check& c, std::string detail) {
  if (!c.pass) return;  // keep the first counterexample
  c.pass = false;
  c.detail = std::move(detail);
}

template <Family F>
std::string label(const char* what) {
  return std::string(what) + "/" + family_name(F);
}

std::map<StatTriple, int> histogram(const std::vector<StatTriple>& triples) {
  std::map<StatTriple, int> out;
  for (const StatTriple& t : triples) ++out[t];
  return out;
}

}  // namespace

VerifyReport verify_equinumerous(int n) {
  VerifyReport report;
  Check c = make("equinumerous", n);
  const BigCount expected = a_total(n);
  std::string counts;
  for (Family f : kAllFamilies) {
    const std::size_t size = visit_family(f, [n]<Family F>() { return FamilyTraits<F>::generate(n).size(); });
    counts += std::string(family_name(f)) + "=" + std::to_string(size) + " ";
    if (BigCount(size) != expected) fail(c, std::string(family_name(f)) + " has " + std::to_string(size));
  }
  if (c.pass) c.detail = counts + "a_total=" + expected.str();
  report.add(std::move(c));
  return report;
}

VerifyReport verify_round_trips(int n) {
  VerifyReport report;
  const auto paths = gen_fpaths(n);
  for (Family f : kAllFamilies) {
    if (f == Family::FPath) continue;
    visit_family(f, [&]<Family F>() {
      using T = FamilyTraits<F>;
      Check forward = make(label<F>("round-trip psi.phi"), n);
      for (const auto& o : T::generate(n)) {
        try {
          const FPath q = T::to_fpath(o);
          FPath::from_steps(std::vector<FStep>(q.steps().begin(), q.steps().end()));
          if (!(T::from_fpath(q) == o)) fail(forward, T::render(o));
        } catch (const Error& e) {
          fail(forward, T::render(o) + ": " + e.what());
        }
      }
      report.add(std::move(forward));

      Check backward = make(label<F>("round-trip phi.psi"), n);
      for (const FPath& q : paths) {
        try {
          const auto o = T::from_fpath(q);
          // parse re-validates every structural invariant of the image
          if (!(T::parse(T::render(o)) == o) || !(T::to_fpath(o) == q)) fail(backward, render_fpath(q));
        } catch (const Error& e) {
          fail(backward, render_fpath(q) + ": " + e.what());
        }
      }
      report.add(std::move(backward));
    });
  }
  return report;
}

VerifyReport verify_statistics(int n) {
  VerifyReport report;
  std::vector<StatTriple> hub;
  for (const FPath& q : gen_fpaths(n)) hub.push_back(fpath_stats(q).triple);
  const auto hub_hist = histogram(hub);

  Check joint = make("statistics/a_joint", n);
  for (const auto& [t, count] : hub_hist) {
    if (a_joint(n, t.a1, t.l, t.h) != count) fail(joint, "triple " + to_string(t));
  }
  // every triple with positive a_joint must actually occur
  for (int h = 0; h <= n; ++h) {
    for (int l = 0; l <= n; ++l) {
      for (int m = 0; m <= n; ++m) {
        if (a_joint(n, h, l, m) != 0 && !hub_hist.contains(StatTriple{m, l, h})) {
          fail(joint, "missing triple " + to_string(StatTriple{m, l, h}));
        }
      }
    }
  }
  report.add(std::move(joint));

  for (Family f : kAllFamilies) {
    if (f == Family::FPath) continue;
    visit_family(f, [&]<Family F>() {
      using T = FamilyTraits<F>;
      Check per_object = make(label<F>("statistics per object"), n);
      std::vector<StatTriple> triples;
      for (const auto& o : T::generate(n)) {
        const StatTriple t = T::stats(o);
        triples.push_back(t);
        if (t != fpath_stats(T::to_fpath(o)).triple) fail(per_object, T::render(o));
      }
      report.add(std::move(per_object));
      Check multiset = make(label<F>("statistics multiset"), n);
      if (histogram(triples) != hub_hist) fail(multiset, "distribution differs from F-paths");
      report.add(std::move(multiset));
    });
  }
  return report;
}

VerifyReport verify_involution(int n) {
  VerifyReport report;
  Check c = make("involution phi_F", n);
  for (const FPath& q : gen_fpaths(n)) {
    const FPath r = involution_phi_F(q);
    const FPathStats s = fpath_stats(q);
    const FPathStats t = fpath_stats(r);
    const bool ok = involution_phi_F(r) == q && t.triple.h == s.triple.h &&
                    t.triple.l == s.triple.l && t.triple.a1 == s.bone - s.triple.l &&
                    t.bone == s.triple.a1 + s.triple.l && s.triple.h <= s.triple.l &&
                    s.triple.l <= s.bone;
    if (!ok) fail(c, render_fpath(q));
  }
  report.add(std::move(c));
  return report;
}

VerifyReport verify_refined_counts(int n) {
  VerifyReport report;
  Check c = make("refined counts", n);
  // signature (i, j, k, l, m)
  std::map<std::array<int, 5>, int> brute;
  for (const FPath& q : gen_fpaths(n)) {
    std::array<int, 5> sig{0, 0, 0, 0, q.height()};
    for (const FStep& s : q.steps()) {
      if (s.is_north()) ++sig[3];
      else if (s.dx == 1 && s.dy == 1) ++sig[0];
      else if (s.dx == 1) ++sig[1];
      else if (s.dy == 1) ++sig[2];
    }
    ++brute[sig];
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      for (int k = 0; i + j + k <= n; ++k) {
        for (int l = 0; i + j + k + l <= n; ++l) {
          for (int m = 0; m <= n; ++m) {
            const auto it = brute.find({i, j, k, l, m});
            const int expected = it == brute.end() ? 0 : it->second;
            if (f_refined(n, i, j, k, l, m) != expected) {
              fail(c, "f(" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j) +
                          "," + std::to_string(k) + "," + std::to_string(l) + "," +
                          std::to_string(m) + ")");
            }
          }
        }
      }
    }
  }
  report.add(std::move(c));
  return report;
}

VerifyReport verify_marginals(int n) {
  VerifyReport report;
  const char* names[] = {"(h,l,*)", "(h,*,m)", "(*,l,m)", "(h,*,*)", "(*,l,*)", "(*,*,m)", "(*,*,*)"};
  for (int form = 0; form < 7; ++form) {
    Check c = make(std::string("marginal ") + names[form], n);
    for (int a = 0; a <= n + 1; ++a) {
      for (int b = 0; b <= n + 1; ++b) {
        MarginalSpec spec;
        switch (form) {
          case 0: spec = {a, b, std::nullopt}; break;
          case 1: spec = {a, std::nullopt, b}; break;
          case 2: spec = {std::nullopt, a, b}; break;
          case 3: spec = {a, std::nullopt, std::nullopt}; break;
          case 4: spec = {std::nullopt, a, std::nullopt}; break;
          case 5: spec = {std::nullopt, std::nullopt, a}; break;
          default: break;
        }
        try {
          if (a_marginal(n, spec) != a_marginal_by_summation(n, spec)) {
            fail(c, "at " + std::to_string(a) + "," + std::to_string(b));
          }
        } catch (const Error& e) {
          fail(c, e.what());
        }
      }
    }
    report.add(std::move(c));
  }
  return report;
}

VerifyReport verify_direct_sums(int n) {
  VerifyReport report;
  const auto paths = gen_fpaths(n);
  for (Family f : kAllFamilies) {
    visit_family(f, [&]<Family F>() {
      using T = FamilyTraits<F>;
      Check c = make(label<F>("direct-sum homomorphism"), n);
      for (const FPath& q : paths) {
        if (!(T::from_fpath(q) == fold_components<F>(q))) fail(c, render_fpath(q));
      }
      report.add(std::move(c));
    });
  }

  Check fp = make("compose.decompose/fpath", n);
  for (const FPath& q : paths) {
    const auto parts = fpath_decompose(q);
    bool ok = fpath_compose(parts) == q && static_cast<int>(parts.size()) == q.height() + 1;
    for (const FPath& p : parts) ok = ok && p.height() == 0;
    if (!ok) fail(fp, render_fpath(q));
  }
  report.add(std::move(fp));

  Check pc = make("compose.decompose/perm", n);
  for (const Permutation& p : gen_avoiders(n + 1)) {
    const auto blocks = block_decompose(p);
    if (perm_compose(blocks) != p || block_count(p) != static_cast<int>(blocks.size())) {
      fail(pc, render_perm(p));
    }
  }
  report.add(std::move(pc));

  auto invseq_check = [&](const char* name, InvFamily fam, auto decompose, auto dsum, auto stat_h) {
    Check c = make(name, n);
    for (const InvSeq& g : gen_invseq(n + 1, fam)) {
      const auto parts = decompose(g);
      InvSeq acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) acc = dsum(acc, parts[i]);
      bool ok = acc == g && static_cast<int>(parts.size()) == stat_h(g) + 1;
      for (const InvSeq& p : parts) ok = ok && stat_h(p) == 0;
      if (!ok) fail(c, render_invseq(g));
    }
    report.add(std::move(c));
  };
  invseq_check("compose.decompose/inv-i", InvFamily::I_101_102, decompose_I, dsum_I,
               [](const InvSeq& e) { return stats_I(e).h; });
  invseq_check("compose.decompose/inv-j", InvFamily::J_101_021, decompose_J, dsum_J,
               [](const InvSeq& e) { return stats_J(e).h; });
  return report;
}

namespace {

// The running 15-step example and its images.
const char* const kExampleQ = "0,1 0,1 0,1 0,1 0,1 0,1 3,-1 0,1 0,1 0,1 1,1 2,1 0,1 0,1 1,-1";

struct Image {
  Family family;
  const char* text;
};

const Image kExampleImages[] = {
    {Family::Schroder, "hhuhuhhddhhuudhduhudd"},
    {Family::Bicolored, "uuuuuuurrbbbuuuububbuuurrburrrrr"},
    {Family::Perm, "1 2 5 8 3 4 6 7 9 16 12 13 11 10 14 15"},
    {Family::InvI, "0,0,0,0,0,3,3,3,3,4,6,7,6,6,0,0"},
    {Family::InvJ, "0,0,0,0,0,1,0,0,4,4,5,9,9,9,0,0"},
    {Family::Tree, "[(1 L L (2 (1 L) L)) L (3 L L L L L) L L]"},
};

// Q^(1) .. Q^(6) and their preimages in each family.
const char* const kSmallQ[] = {"0,1 1,0", "0,1 2,1", "1,1 1,1", "0,1 1,1", "1,1 0,1", "0,1 0,1"};

struct SmallTable {
  Family family;
  const char* texts[6];
};

const SmallTable kSmallTables[] = {
    {Family::Schroder, {"uudd", "uhd", "udud", "hud", "udh", "hh"}},
    {Family::Bicolored, {"uurbur", "uubbur", "ububur", "uuburr", "ubuurr", "uuurrr"}},
    {Family::Perm, {"3 1 2", "2 3 1", "3 2 1", "1 3 2", "2 1 3", "1 2 3"}},
    {Family::InvI, {"0,1,0", "0,0,2", "0,1,2", "0,0,1", "0,1,1", "0,0,0"}},
    {Family::InvJ, {"0,1,0", "0,1,1", "0,1,2", "0,0,1", "0,0,2", "0,0,0"}},
    {Family::Tree, {"[(1 L L)]", "[(2 L L)]", "[(1 (1 L))]", "[(1 L) L]", "[L (1 L)]", "[L L L]"}},
};

std::string map_from_hub(Family f, const FPath& q) {
  return visit_family(f, [&]<Family F>() { return FamilyTraits<F>::render(FamilyTraits<F>::from_fpath(q)); });
}

FPath map_to_hub(Family f, const std::string& text) {
  return visit_family(f, [&]<Family F>() { return FamilyTraits<F>::to_fpath(FamilyTraits<F>::parse(text)); });
}

}  // namespace

VerifyReport verify_pinned_examples() {
  VerifyReport report;
  const FPath q = parse_fpath(kExampleQ);

  for (const Image& img : kExampleImages) {
    Check c = make(std::string("example image/") + family_name(img.family), -1);
    const std::string got = map_from_hub(img.family, q);
    if (got != img.text) fail(c, "got " + got);
    if (map_to_hub(img.family, img.text) != q) fail(c, "phi does not return Q");
    report.add(std::move(c));
  }

  for (const SmallTable& table : kSmallTables) {
    Check c = make(std::string("length-2 table/") + family_name(table.family), 2);
    for (int i = 0; i < 6; ++i) {
      if (map_to_hub(table.family, table.texts[i]) != parse_fpath(kSmallQ[i])) fail(c, table.texts[i]);
    }
    report.add(std::move(c));
  }

  Check shapes = make("shape analysis examples", -1);
  struct ShapeCaseRow {
    const char* perm;
    int x, y, z, w;
    ShapeCase shape;
  };
  const ShapeCaseRow rows[] = {
      {"321547689", 9, 8, 8, 9, ShapeCase::ZEqLt},
      {"321549768", 6, 4, 5, 6, ShapeCase::ZLtLt},
      {"321849657", 6, 4, 8, 5, ShapeCase::ZEqGt},
      {"321749658", 6, 4, 7, 5, ShapeCase::ZLtGt},
  };
  for (const auto& row : rows) {
    const Permutation p = parse_perm(row.perm);
    const ShapeData s = shape_analysis(p);
    if (s.x != row.x || s.y != row.y || s.z != row.z || s.w != row.w || s.shape != row.shape ||
        !shape_set_equalities_hold(p, s)) {
      fail(shapes, row.perm);
    }
  }
  report.add(std::move(shapes));

  Check chain_s = make("decomposition chain/perm", -1);
  {
    const auto blocks = block_decompose(psi_S(q));
    std::string got;
    for (const auto& b : blocks) got += (got.empty() ? "" : " + ") + render_perm(b);
    if (got != "1 + 1 + 3 6 1 2 4 5 + 1 + 7 3 4 2 1 5 6") fail(chain_s, got);
  }
  report.add(std::move(chain_s));

  Check chain_i = make("decomposition chain/inv-i", -1);
  {
    std::string got;
    for (const auto& e : decompose_I(psi_I(q))) got += (got.empty() ? "" : " + ") + render_invseq(e);
    if (got != "0 + 0 + 0,0,0,3,0,0 + 0 + 0,0,1,3,4,3,3") fail(chain_i, got);
  }
  report.add(std::move(chain_i));

  Check chain_j = make("decomposition chain/inv-j", -1);
  {
    std::string got;
    for (const auto& e : decompose_J(psi_J(q))) got += (got.empty() ? "" : " + ") + render_invseq(e);
    if (got != "0 + 0 + 0,1,1,1,0,0 + 0 + 0,1,0,0,4,4,5") fail(chain_j, got);
  }
  report.add(std::move(chain_j));
  return report;
}

VerifyReport run_all(int max_n) {
  VerifyReport report;
  for (int n = 0; n <= max_n; ++n) {
    report.merge(verify_equinumerous(n));
    report.merge(verify_round_trips(n));
    report.merge(verify_statistics(n));
    report.merge(verify_involution(n));
    report.merge(verify_refined_counts(n));
    report.merge(verify_marginals(n));
    report.merge(verify_direct_sums(n));
  }
  report.merge(verify_pinned_examples());
  return report;
}

}  // namespace fpaths
