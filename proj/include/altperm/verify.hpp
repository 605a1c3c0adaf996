#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace altperm {

struct Counterexample {
  std::size_t n = 0;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::optional<Counterexample> failure;  // first mismatch
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const noexcept { return !failure; }
};

/// Oracle vs closed form (and decomposition sum) for exactly-one-321/123
/// counts, n = 3..n_max, both classes.
SuiteReport verify_exactly_once(std::size_t n_max);

/// Every table cell with n <= n_max: formula vs oracle inside the validity
/// range; oracle-only values are recorded as notes outside it.
SuiteReport verify_table(std::size_t n_max);

/// Convolution sums vs closed forms for m <= m_max; decomposition sums vs
/// closed forms for n <= sum_n_max and vs the oracle for n <= oracle_n_max.
SuiteReport verify_identities(std::size_t m_max, std::size_t sum_n_max,
                              std::size_t oracle_n_max);

/// Bijection checks for 3 <= n <= n_max on both classes.
SuiteReport verify_bijection(std::size_t n_max);

/// Generated alternating counts vs the boustrophedon numbers, n <= n_max.
SuiteReport verify_zigzag(std::size_t n_max);

/// Reversal symmetry over all permutations with n <= n_max.
SuiteReport verify_symmetry(std::size_t n_max);

}  // namespace altperm
