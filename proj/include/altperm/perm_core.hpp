#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altperm/bigcount.hpp"

namespace altperm {

/// A permutation of {1..n} in one-line notation. Positions are 1-based at the
/// API boundary (`at`); `entries()` exposes the raw sequence.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `entries` is a bijection onto 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entry at 1-based `position`.
  int at(std::size_t position) const;

  std::span<const int> entries() const noexcept { return entries_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<int> entries) : entries_(std::move(entries)) {}

  friend class PermutationStream;
  friend Permutation reverse(const Permutation&);
  friend Permutation complement(const Permutation&);
  friend Permutation standardize(std::span<const int>);

  std::vector<int> entries_;
};

/// A classical pattern: a permutation of length k >= 1.
class Pattern {
 public:
  explicit Pattern(Permutation letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const Permutation& letters() const noexcept { return letters_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Permutation letters_;
};

const Pattern& pattern_321();
const Pattern& pattern_123();

enum class AlternationClass { UpDown, DownUp };

AlternationClass opposite(AlternationClass c) noexcept;

/// Result of `classify`: the subset of alternation classes a permutation fits.
struct ClassSet {
  bool up_down = false;
  bool down_up = false;

  bool contains(AlternationClass c) const noexcept {
    return c == AlternationClass::UpDown ? up_down : down_up;
  }
  bool empty() const noexcept { return !up_down && !down_up; }

  friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

/// Lengths 0 and 1 belong to both classes.
ClassSet classify(const Permutation& w);
bool is_alternating(std::span<const int> values, AlternationClass c) noexcept;

/// Strictly increasing 1-based positions into a host permutation.
struct Occurrence {
  std::vector<std::size_t> positions;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

BigCount count_occurrences(const Permutation& w, const Pattern& p);

/// Occurrence count over an arbitrary sequence of distinct values.
std::uint64_t count_occurrences_in(std::span<const int> values, const Pattern& p);

/// Occurrences whose last letter sits at the final position of `values`.
/// The backtracking generator uses this to keep a running count per prefix.
std::uint64_t count_occurrences_ending_last(std::span<const int> values, const Pattern& p);

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Lexicographically smallest occurrences by position tuple, at most `limit`.
std::vector<Occurrence> find_occurrences(const Permutation& w, const Pattern& p,
                                         std::size_t limit);

Permutation reverse(const Permutation& w);
Permutation complement(const Permutation& w);

/// Replace each value by its rank. Throws std::invalid_argument on repeats.
Permutation standardize(std::span<const int> values);

struct BoundaryStatistics {
  bool ends_in_largest = false;
  bool begins_with_smallest = false;

  friend bool operator==(const BoundaryStatistics&, const BoundaryStatistics&) = default;
};

/// Throws std::invalid_argument for the empty permutation.
BoundaryStatistics boundary_statistics(const Permutation& w);

// Text forms: "1,4,3,5,2,6" (empty string is n = 0) and "UD" / "DU".
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& w);
AlternationClass parse_class(std::string_view text);
std::string_view class_name(AlternationClass c) noexcept;

}  // namespace altperm
