#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpaths/bicolored.hpp"
#include "fpaths/fpath.hpp"
#include "fpaths/invseq.hpp"
#include "fpaths/perms.hpp"
#include "fpaths/schroder.hpp"
#include "fpaths/wtree.hpp"

namespace fpaths {

enum class Family { FPath, Schroder, Bicolored, Perm, InvI, InvJ, Tree };

inline constexpr Family kAllFamilies[] = {Family::FPath, Family::Schroder, Family::Bicolored,
                                          Family::Perm,  Family::InvI,     Family::InvJ,
                                          Family::Tree};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Uniform access to each family. `generate(n)` returns the objects matched
// with F-paths of length n (size n+1 where the family counts that way).
template <Family F>
struct FamilyTraits;

template <>
struct FamilyTraits<Family::FPath> {
  using Object = FPath;
  static std::vector<Object> generate(int n) { return gen_fpaths(n); }
  static FPath to_fpath(const Object& o) { return o; }
  static Object from_fpath(const FPath& q) { return q; }
  static StatTriple stats(const Object& o) { return fpath_stats(o).triple; }
  static std::string render(const Object& o) { return render_fpath(o); }
  static Object parse(const std::string& s) { return parse_fpath(s); }
  static Object direct_sum(const Object& a, const Object& b) { return fpath_direct_sum(a, b); }
};

template <>
struct FamilyTraits<Family::Schroder> {
  using Object = SchroderWord;
  static std::vector<Object> generate(int n) { return gen_schroder(n); }
  static FPath to_fpath(const Object& o) { return phi_P(o); }
  static Object from_fpath(const FPath& q) { return psi_P(q); }
  static StatTriple stats(const Object& o) { return schroder_stats(o); }
  static std::string render(const Object& o) { return render_schroder(o); }
  static Object parse(const std::string& s) { return parse_schroder(s); }
  static Object direct_sum(const Object& a, const Object& b) { return schroder_direct_sum(a, b); }
};

template <>
struct FamilyTraits<Family::Bicolored> {
  using Object = BicoloredWord;
  static std::vector<Object> generate(int n) { return gen_bicolored(n + 1); }
  static FPath to_fpath(const Object& o) { return phi_B(o); }
  static Object from_fpath(const FPath& q) { return psi_B(q); }
  static StatTriple stats(const Object& o) { return bicolored_stats(o); }
  static std::string render(const Object& o) { return render_bicolored(o); }
  static Object parse(const std::string& s) { return parse_bicolored(s); }
  static Object direct_sum(const Object& a, const Object& b) { return bicolored_direct_sum(a, b); }
};

template <>
struct FamilyTraits<Family::Perm> {
  using Object = Permutation;
  static std::vector<Object> generate(int n) { return gen_avoiders(n + 1); }
  static FPath to_fpath(const Object& o) { return phi_S(o, true); }
  static Object from_fpath(const FPath& q) { return psi_S(q); }
  static StatTriple stats(const Object& o) { return perm_stats(o); }
  static std::string render(const Object& o) { return render_perm(o); }
  static Object parse(const std::string& s) { return parse_perm(s); }
  static Object direct_sum(const Object& a, const Object& b) { return perm_direct_sum(a, b); }
};

template <>
struct FamilyTraits<Family::InvI> {
  using Object = InvSeq;
  static std::vector<Object> generate(int n) { return gen_invseq(n + 1, InvFamily::I_101_102); }
  static FPath to_fpath(const Object& o) { return phi_I(o); }
  static Object from_fpath(const FPath& q) { return psi_I(q); }
  static StatTriple stats(const Object& o) { return stats_I(o); }
  static std::string render(const Object& o) { return render_invseq(o); }
  static Object parse(const std::string& s) { return parse_invseq(s, InvFamily::I_101_102); }
  static Object direct_sum(const Object& a, const Object& b) { return dsum_I(a, b); }
};

template <>
struct FamilyTraits<Family::InvJ> {
  using Object = InvSeq;
  static std::vector<Object> generate(int n) { return gen_invseq(n + 1, InvFamily::J_101_021); }
  static FPath to_fpath(const Object& o) { return phi_J(o); }
  static Object from_fpath(const FPath& q) { return psi_J(q); }
  static StatTriple stats(const Object& o) { return stats_J(o); }
  static std::string render(const Object& o) { return render_invseq(o); }
  static Object parse(const std::string& s) { return parse_invseq(s, InvFamily::J_101_021); }
  static Object direct_sum(const Object& a, const Object& b) { return dsum_J(a, b); }
};

template <>
struct FamilyTraits<Family::Tree> {
  using Object = WTree;
  static std::vector<Object> generate(int n) { return gen_wtrees(n + 1); }
  static FPath to_fpath(const Object& o) { return phi_T(o); }
  static Object from_fpath(const FPath& q) { return psi_T(q); }
  static StatTriple stats(const Object& o) { return wtree_stats(o); }
  static std::string render(const Object& o) { return render_wtree(o); }
  static Object parse(const std::string& s) { return parse_wtree(s); }
  static Object direct_sum(const Object& a, const Object& b) { return wtree_direct_sum(a, b); }
};

/// Calls fn.template operator()<F>() for the runtime family f.
template <typename Fn>
decltype(auto) visit_family(Family f, Fn&& fn) {
  switch (f) {
    case Family::FPath: return fn.template operator()<Family::FPath>();
    case Family::Schroder: return fn.template operator()<Family::Schroder>();
    case Family::Bicolored: return fn.template operator()<Family::Bicolored>();
    case Family::Perm: return fn.template operator()<Family::Perm>();
    case Family::InvI: return fn.template operator()<Family::InvI>();
    case Family::InvJ: return fn.template operator()<Family::InvJ>();
    case Family::Tree: break;
  }
  return fn.template operator()<Family::Tree>();
}

/// Left fold of psi over the height decomposition of q.
template <Family F>
typename FamilyTraits<F>::Object fold_components(const FPath& q) {
  using T = FamilyTraits<F>;
  const auto parts = fpath_decompose(q);
  auto acc = T::from_fpath(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = T::direct_sum(acc, T::from_fpath(parts[i]));
  return acc;
}

}  // namespace fpaths
