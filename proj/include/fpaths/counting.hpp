#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpaths {

using BigCount = boost::multiprecision::cpp_int;

/// Ordinary binomial; 0 outside 0 <= k <= n.
BigCount binomial(int n, int k);

/// [z^t] (1-z)^{-s}
BigCount series_coeff(int t, int s);

/// Binomial with the degenerate cases read as series coefficients:
/// C(-1,-1) = 1, C(N,K) = 0 for K < -1 or when no coefficient exists.
BigCount ext_binom(int n, int k);

/// 0 unless the parts are nonnegative and sum to n.
BigCount multinomial(int n, std::span<const int> parts);

/// Number of F-paths of length n with i steps (1,1), j steps (1,b<=0),
/// k steps (a>=2,1), l north steps and height m.
BigCount f_refined(int n, int i, int j, int k, int l, int m);

/// Number of F-paths of length n with aone h, north l and height m.
BigCount a_joint(int n, int h, int l, int m);

/// Fixed coordinates of a_n(h, l, m); nullopt marks a summed-out one.
struct MarginalSpec {
  std::optional<int> h;
  std::optional<int> l;
  std::optional<int> m;
};

/// Closed form for every combination of fixed and summed coordinates.
BigCount a_marginal(int n, const MarginalSpec& spec);

/// Same quantity by summing a_joint over the starred coordinates.
BigCount a_marginal_by_summation(int n, const MarginalSpec& spec);

BigCount a_total(int n);
std::vector<BigCount> sequence(int max_n);

/// "n a(n)" lines starting at n = 0.
std::string render_bfile(std::span<const BigCount> values);

}  // namespace fpaths
