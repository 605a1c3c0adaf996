#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "altperm/bigcount.hpp"
#include "altperm/enumerate.hpp"
#include "altperm/perm_core.hpp"

namespace altperm {

/// Exact Catalan number; memoized internally.
BigCount catalan(std::size_t index);

enum class Parity { Even, Odd };

/// Closed-form cell value in terms of l, where n = 2l or n = 2l + 1.
enum class CatalanTerm { NextCatalan, Catalan, Zero };

/// One cell of the table of 321-avoiding alternating permutation counts.
struct Table1Row {
  AlternationClass alternation;
  Parity parity;
  Statistic statistic;
  CatalanTerm formula;
  std::size_t valid_from;  // smallest l for which the formula holds
};

const std::array<Table1Row, 12>& table1_rows();
const Table1Row& table1_row(AlternationClass c, Parity parity, Statistic statistic);

/// The requested cell is outside its row's validity range; use
/// `table1_oracle` instead.
class OutOfValidityRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

BigCount table1_formula(AlternationClass c, std::size_t n, Statistic statistic);

enum class CandidateRole {
  UCandidate,  // does not end in its largest entry
  VCandidate,  // does not begin with its smallest entry
};

/// 321-avoiding, class-consistent permutations of length n >= 1 meeting the
/// role's boundary condition. Falls back to the oracle outside the table's
/// validity ranges.
BigCount boundary_count(AlternationClass c, std::size_t n, CandidateRole role);

BigCount closed_form_even_321(std::size_t m);
BigCount closed_form_even_123(std::size_t m);
BigCount closed_form_odd(std::size_t m);

/// Literal transcriptions of the two published convolution sums.
BigCount convolution_even_321(std::size_t m);
BigCount convolution_odd_321(std::size_t m);

/// Class of the suffix piece V in a split at middle position j: the host
/// class when j is odd, the opposite class when j is even.
AlternationClass suffix_class(AlternationClass host, std::size_t j) noexcept;

/// Sum over the middle position j = 2..n-1 of
///   boundary_count(host, j, U) * boundary_count(suffix_class(host, j), n-j+1, V).
/// Counts hosts of the class with exactly one 321. Requires n >= 3.
BigCount decomposition_sum(std::size_t n, AlternationClass host);

enum class SequencePattern { P321, P123 };

struct SequenceSpec {
  SequencePattern pattern = SequencePattern::P321;
  AlternationClass alternation = AlternationClass::UpDown;
};

const Pattern& as_pattern(SequencePattern p);
SequencePattern parse_sequence_pattern(std::string_view text);
std::string_view sequence_pattern_name(SequencePattern p) noexcept;

/// Number of length-n permutations of the class containing the pattern
/// exactly once, from the closed forms. DownUp is reduced to UpDown by
/// complementation (which swaps 321 and 123).
BigCount exactly_once_count(SequenceSpec spec, std::size_t n);

}  // namespace altperm
