#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "altperm/bigcount.hpp"
#include "altperm/perm_core.hpp"

namespace altperm {

struct OccurrenceConstraint {
  Pattern pattern;
  std::uint64_t count = 0;
};

/// Constraints for the backtracking generator. `avoid` and
/// `exact_occurrences` are alternative spellings of the same constraint and
/// may not both be set.
struct GenerationFilter {
  AlternationClass alternation = AlternationClass::UpDown;
  std::size_t length = 0;
  std::optional<Pattern> avoid;
  std::optional<OccurrenceConstraint> exact_occurrences;
  std::optional<bool> ends_in_largest;
  std::optional<bool> begins_with_smallest;
};

/// Lazily yields the permutations matching a filter in lexicographic order.
/// Prunes on the alternation inequality at every placement and abandons a
/// prefix once its running occurrence count passes the target.
class PermutationStream {
 public:
  explicit PermutationStream(GenerationFilter filter);

  /// Restricts the search to permutations starting with `first` (1-based
  /// value). Used to partition counting work.
  PermutationStream(GenerationFilter filter, int first);

  std::optional<Permutation> next();

  /// Advances to the next match without materializing it.
  bool advance();

  const GenerationFilter& filter() const noexcept { return filter_; }

 private:
  bool admissible(std::size_t depth, int value) const;
  bool leaf_accepts() const;

  GenerationFilter filter_;
  std::optional<Pattern> tracked_;
  std::uint64_t target_ = 0;
  std::optional<int> first_;

  int n_;
  std::vector<int> prefix_;
  std::vector<char> used_;
  std::vector<int> next_value_;       // next candidate value per depth
  std::vector<std::uint64_t> occ_;    // running occurrence count per depth
  std::ptrdiff_t depth_ = 0;
  bool done_ = false;
};

PermutationStream generate(const GenerationFilter& filter);

/// Materializes the whole stream.
std::vector<Permutation> generate_all(const GenerationFilter& filter);

/// Cardinality of the stream; partitions by first entry across threads for
/// larger lengths. The result does not depend on the partitioning.
BigCount count(const GenerationFilter& filter);

/// Number of UpDown permutations of length n by the boustrophedon recurrence.
BigCount euler_zigzag(std::size_t n);

enum class Statistic { Total, EndsInLargest, BeginsWithSmallest };

/// 321-avoiding permutations of the class and length satisfying the statistic,
/// counted by generation.
BigCount table1_oracle(AlternationClass c, std::size_t n, Statistic statistic);

}  // namespace altperm
