#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "altperm/enumerate.hpp"
#include "altperm/perm_core.hpp"

namespace altperm {

/// Right-hand side of the unique-321 bijection.
///
/// For a host w whose single 321 occurrence is at positions i < j < k:
///   u = standardize(w_1 .. w_{j-1}, w_k)     (length j)
///   v = standardize(w_i, w_{j+1} .. w_n)     (length n - j + 1)
/// Both avoid 321. u has the host's class and does not end in its largest
/// entry; v does not begin with its smallest entry and has the host's class
/// when j is odd, the opposite class when j is even.
struct DecompositionRecord {
  std::size_t n = 0;
  AlternationClass alternation = AlternationClass::UpDown;
  std::size_t j = 0;
  Permutation u;
  Permutation v;

  friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

/// The input is outside the bijection's domain: its 321 count is not 1.
class NotExactlyOne : public std::invalid_argument {
 public:
  explicit NotExactlyOne(std::uint64_t found);
  std::uint64_t found() const noexcept { return found_; }

 private:
  std::uint64_t found_;
};

class NotAlternating : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidRecord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The next two are never recoverable: they mean the characterization of
// unique-321 hosts failed, or the inverse map is wrong.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws NotExactlyOne when w does not contain exactly one 321.
Occurrence locate_unique_321(const Permutation& w);

DecompositionRecord split(const Permutation& w);

/// Inverse of split. Throws InvalidRecord if the record violates its
/// invariants.
Permutation reconstruct(const DecompositionRecord& record);

/// Description of the first violated record invariant, if any.
std::optional<std::string> record_violation(const DecompositionRecord& record);

/// All hosts of length n and the class with exactly one 321, built by
/// reconstructing every valid record; ordered by j, then U, then V.
class DecompositionStream {
 public:
  DecompositionStream(std::size_t n, AlternationClass host);

  std::optional<Permutation> next();

  /// Record behind the most recent `next()` result.
  const DecompositionRecord& current() const noexcept { return record_; }

 private:
  bool advance_pieces();
  GenerationFilter u_filter() const;
  GenerationFilter v_filter() const;

  std::size_t n_;
  AlternationClass host_;
  std::size_t j_ = 2;
  std::optional<PermutationStream> u_stream_;
  std::optional<PermutationStream> v_stream_;
  std::optional<Permutation> u_;
  DecompositionRecord record_;
};

DecompositionStream enumerate_by_decomposition(std::size_t n, AlternationClass host);

// Text form: "n=6;class=UD;j=3;U=1,3,2;V=2,3,1,4". Parsing checks syntax
// only; use record_violation for the structural invariants.
std::string format_record(const DecompositionRecord& record);
DecompositionRecord parse_record(std::string_view text);

}  // namespace altperm
