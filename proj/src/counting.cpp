#include "fpaths/counting.hpp"

#include <algorithm>

#include "fpaths/error.hpp"

namespace fpaths {

namespace {

BigCount exact_div(const BigCount& num, int den, const char* what) {
  if (num % den != 0) throw Error(ErrorKind::InexactDivision, what);
  return num / den;
}

}  // namespace

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount series_coeff(int t, int s) {
  if (t < 0) return 0;
  if (s == 0) return t == 0 ? 1 : 0;
  return binomial(t + s - 1, s - 1);
}

BigCount ext_binom(int n, int k) {
  if (k == -1) return n == -1 ? 1 : 0;
  if (k < -1) return 0;
  return series_coeff(n - k, k + 1);
}

BigCount multinomial(int n, std::span<const int> parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != n) return 0;
  BigCount r = 1;
  int remaining = n;
  for (int p : parts) {
    r *= binomial(remaining, p);
    remaining -= p;
  }
  return r;
}

BigCount f_refined(int n, int i, int j, int k, int l, int m) {
  const int np = n - i - j - k - l;
  if (np < 0 || n < 0 || i < 0 || j < 0 || k < 0 || l < 0 || m < 0) return 0;
  const int s = 2 * np + j + k;
  const int t = l - m - s;
  const int parts[] = {i, j, k, l + 1, np};
  const BigCount num = BigCount(m + 1) * multinomial(n + 1, parts) * series_coeff(t, s);
  return exact_div(num, n + 1, "f_refined");
}

BigCount a_joint(int n, int h, int l, int m) {
  if (n < 0 || h < 0 || l < 0 || m < 0) return 0;
  const int s = 2 * (n - l) - h;
  if (s < 0) return 0;
  const BigCount num = BigCount(m + 1) * ext_binom(n + 1, l + 1) * ext_binom(n - l, h) *
                       series_coeff(n - m - s, s);
  return exact_div(num, n + 1, "a_joint");
}

BigCount a_marginal(int n, const MarginalSpec& spec) {
  if (n < 0) return 0;
  const int top = 2 * n + 3;  // every summand below vanishes past this index
  const auto& [h, l, m] = spec;
  if ((h && *h < 0) || (l && *l < 0) || (m && *m < 0)) return 0;
  BigCount num = 0;
  if (h && l && m) return a_joint(n, *h, *l, *m);
  if (h && l) {
    num = ext_binom(n + 1, *l + 1) * ext_binom(n - *l, *h) * ext_binom(n + 1, 2 * *l + *h - n);
  } else if (h && m) {
    BigCount sum = 0;
    for (int i = 0; i <= top; ++i) {
      sum += ext_binom(n - *h + 1, i + 1) * ext_binom(n - *m - 1, 2 * n - *h - 2 * i - 1);
    }
    num = BigCount(*m + 1) * ext_binom(n + 1, *h) * sum;
  } else if (l && m) {
    num = BigCount(*m + 1) * ext_binom(n + 1, *l + 1) *
          ext_binom(2 * n - *l - *m - 1, 2 * n - 2 * *l - 1);
  } else if (h) {
    BigCount sum = 0;
    for (int i = 0; i <= top; ++i) {
      sum += ext_binom(n - *h + 1, i) * ext_binom(n + 1, 2 * i + *h + 1);
    }
    num = ext_binom(n + 1, *h) * sum;
  } else if (l) {
    num = ext_binom(n + 1, *l + 1) * ext_binom(2 * n - *l + 1, *l);
  } else if (m) {
    BigCount sum = 0;
    for (int i = 0; i <= top; ++i) {
      sum += ext_binom(n + 1, i) * ext_binom(n - *m + i - 1, 2 * i - 1);
    }
    num = BigCount(*m + 1) * sum;
  } else {
    for (int i = 0; i <= top; ++i) num += ext_binom(n + 1, i + 1) * ext_binom(2 * n - i + 1, i);
  }
  return exact_div(num, n + 1, "a_marginal");
}

BigCount a_marginal_by_summation(int n, const MarginalSpec& spec) {
  // h, l, m are all at most n for any F-path of length n.
  auto range = [n](const std::optional<int>& fixed) {
    return fixed ? std::pair{*fixed, *fixed} : std::pair{0, n};
  };
  const auto [h0, h1] = range(spec.h);
  const auto [l0, l1] = range(spec.l);
  const auto [m0, m1] = range(spec.m);
  BigCount sum = 0;
  for (int h = h0; h <= h1; ++h) {
    for (int l = l0; l <= l1; ++l) {
      for (int m = m0; m <= m1; ++m) sum += a_joint(n, h, l, m);
    }
  }
  return sum;
}

BigCount a_total(int n) { return a_marginal(n, {}); }

std::vector<BigCount> sequence(int max_n) {
  std::vector<BigCount> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(a_total(n));
  return out;
}

std::string render_bfile(std::span<const BigCount> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i) + ' ' + values[i].str() + '\n';
  }
  return out;
}

}  // namespace fpaths
