#include "altperm/formulas.hpp"

#include <algorithm>
#include <mutex>

namespace altperm {

namespace {

BigCount factorial(std::size_t n) {
  BigCount f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// The closed forms are integers; a remainder means a transcription error.
BigCount exact_quotient(const BigCount& numerator, const BigCount& denominator) {
  BigCount q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0) {
    throw std::logic_error("closed form is not integral: " + numerator.str() + " / " +
                           denominator.str());
  }
  return q;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BigCount catalan(std::size_t index) {
  static std::mutex mu;
  static std::vector<BigCount> memo{1};
  std::lock_guard lock(mu);
  while (memo.size() <= index) {
    const std::size_t k = memo.size() - 1;
    memo.push_back(exact_quotient(memo.back() * (2 * (2 * k + 1)), BigCount(k + 2)));
  }
  return memo[index];
}

const std::array<Table1Row, 12>& table1_rows() {
  using enum AlternationClass;
  using enum Parity;
  using enum Statistic;
  using enum CatalanTerm;
  static const std::array<Table1Row, 12> rows{{
      {UpDown, Even, Total, NextCatalan, 2},
      {UpDown, Even, EndsInLargest, Catalan, 2},
      {UpDown, Even, BeginsWithSmallest, Catalan, 2},
      {UpDown, Odd, Total, NextCatalan, 1},
      {UpDown, Odd, EndsInLargest, Zero, 1},
      {UpDown, Odd, BeginsWithSmallest, Catalan, 1},
      {DownUp, Even, Total, Catalan, 0},
      {DownUp, Even, EndsInLargest, Zero, 0},
      {DownUp, Even, BeginsWithSmallest, Zero, 0},
      {DownUp, Odd, Total, NextCatalan, 1},
      {DownUp, Odd, EndsInLargest, Catalan, 1},
      {DownUp, Odd, BeginsWithSmallest, Zero, 1},
  }};
  return rows;
}

const Table1Row& table1_row(AlternationClass c, Parity parity, Statistic statistic) {
  const auto& rows = table1_rows();
  return *std::find_if(rows.begin(), rows.end(), [&](const Table1Row& r) {
    return r.alternation == c && r.parity == parity && r.statistic == statistic;
  });
}

BigCount table1_formula(AlternationClass c, std::size_t n, Statistic statistic) {
  const auto parity = n % 2 == 0 ? Parity::Even : Parity::Odd;
  const std::size_t half = n / 2;
  const auto& row = table1_row(c, parity, statistic);
  if (half < row.valid_from) {
    throw OutOfValidityRange("table cell (" + std::string(class_name(c)) + ", n=" +
                             std::to_string(n) + ") requires l >= " +
                             std::to_string(row.valid_from));
  }
  switch (row.formula) {
    case CatalanTerm::NextCatalan: return catalan(half + 1);
    case CatalanTerm::Catalan: return catalan(half);
    case CatalanTerm::Zero: break;
  }
  return 0;
}

BigCount boundary_count(AlternationClass c, std::size_t n, CandidateRole role) {
  require(n >= 1, "boundary_count: n must be >= 1");
  const auto constrained =
      role == CandidateRole::UCandidate ? Statistic::EndsInLargest : Statistic::BeginsWithSmallest;
  try {
    return table1_formula(c, n, Statistic::Total) - table1_formula(c, n, constrained);
  } catch (const OutOfValidityRange&) {
    GenerationFilter f;
    f.alternation = c;
    f.length = n;
    f.avoid = pattern_321();
    if (role == CandidateRole::UCandidate) {
      f.ends_in_largest = false;
    } else {
      f.begins_with_smallest = false;
    }
    return count(f);
  }
}

BigCount closed_form_even_321(std::size_t m) {
  require(m >= 2, "closed_form_even_321: m must be >= 2");
  return exact_quotient(4 * BigCount(m - 2) * factorial(2 * m + 3),
                        factorial(m + 1) * factorial(m + 4));
}

BigCount closed_form_even_123(std::size_t m) {
  require(m >= 2, "closed_form_even_123: m must be >= 2");
  return exact_quotient(10 * factorial(2 * m), factorial(m - 2) * factorial(m + 3));
}

BigCount closed_form_odd(std::size_t m) {
  require(m >= 1, "closed_form_odd: m must be >= 1");
  return exact_quotient(3 * BigCount(3 * m + 4) * BigCount(m - 1) * factorial(2 * m + 2),
                        factorial(m + 1) * factorial(m + 4));
}

BigCount convolution_even_321(std::size_t m) {
  require(m >= 2, "convolution_even_321: m must be >= 2");
  BigCount total = 0;
  for (std::size_t j = 1; j + 2 <= m; ++j)
    total += catalan(j + 1) * (catalan(m - j + 1) - catalan(m - j));
  for (std::size_t j = 2; j + 1 <= m; ++j)
    total += (catalan(j + 1) - catalan(j)) * catalan(m - j + 1);
  return total;
}

BigCount convolution_odd_321(std::size_t m) {
  require(m >= 1, "convolution_odd_321: m must be >= 1");
  BigCount total = 0;
  for (std::size_t j = 1; j + 1 <= m; ++j)
    total += catalan(j + 1) * (catalan(m - j + 1) - catalan(m - j));
  for (std::size_t j = 2; j <= m; ++j)
    total += (catalan(j + 1) - catalan(j)) * catalan(m - j + 1);
  return total;
}

AlternationClass suffix_class(AlternationClass host, std::size_t j) noexcept {
  return j % 2 == 1 ? host : opposite(host);
}

BigCount decomposition_sum(std::size_t n, AlternationClass host) {
  require(n >= 3, "decomposition_sum: n must be >= 3");
  BigCount total = 0;
  for (std::size_t j = 2; j + 1 <= n; ++j) {
    total += boundary_count(host, j, CandidateRole::UCandidate) *
             boundary_count(suffix_class(host, j), n - j + 1, CandidateRole::VCandidate);
  }
  return total;
}

const Pattern& as_pattern(SequencePattern p) {
  return p == SequencePattern::P321 ? pattern_321() : pattern_123();
}

SequencePattern parse_sequence_pattern(std::string_view text) {
  if (text == "321") return SequencePattern::P321;
  if (text == "123") return SequencePattern::P123;
  throw std::invalid_argument("unknown pattern '" + std::string(text) +
                              "' (expected 321 or 123)");
}

std::string_view sequence_pattern_name(SequencePattern p) noexcept {
  return p == SequencePattern::P321 ? "321" : "123";
}

BigCount exactly_once_count(SequenceSpec spec, std::size_t n) {
  require(n >= 1, "exactly_once_count: n must be >= 1");
  if (spec.alternation == AlternationClass::DownUp) {
    const auto swapped =
        spec.pattern == SequencePattern::P321 ? SequencePattern::P123 : SequencePattern::P321;
    return exactly_once_count({swapped, AlternationClass::UpDown}, n);
  }
  // Oracle values for n = 1..4, below or at the edge of the formulas' ranges.
  constexpr std::array<int, 5> small_321{0, 0, 0, 0, 0};
  constexpr std::array<int, 5> small_123{0, 0, 0, 0, 2};
  if (n <= 4) return spec.pattern == SequencePattern::P321 ? small_321[n] : small_123[n];
  const std::size_t m = n / 2;
  if (n % 2 == 1) return closed_form_odd(m);
  return spec.pattern == SequencePattern::P321 ? closed_form_even_321(m) : closed_form_even_123(m);
}

}  // namespace altperm
