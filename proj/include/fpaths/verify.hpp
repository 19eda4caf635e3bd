#pragma once

#include <string>
#include <vector>

namespace fpaths {

struct Check {
  std::string name;
  int n = -1;  // -1 for checks not indexed by size
  bool pass = true;
  std::string detail;  // counterexample text on failure
};

struct VerifyReport {
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const VerifyReport& other);
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }

  /// One "PASS|FAIL name [n=..] detail" line per check plus a summary line.
  std::string to_text() const;
  std::string to_json() const;
};

inline constexpr int kDefaultVerifyMaxN = 6;

VerifyReport verify_equinumerous(int n);
VerifyReport verify_round_trips(int n);
VerifyReport verify_statistics(int n);
VerifyReport verify_involution(int n);
VerifyReport verify_refined_counts(int n);
VerifyReport verify_marginals(int n);
VerifyReport verify_direct_sums(int n);
VerifyReport verify_pinned_examples();

/// Every check above for n = 0..max_n, plus the pinned examples.
VerifyReport run_all(int max_n = kDefaultVerifyMaxN);

}  // namespace fpaths
