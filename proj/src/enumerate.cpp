#include "altperm/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace altperm {

namespace {

constexpr std::size_t kParallelThreshold = 9;

void validate(const GenerationFilter& f) {
  if (f.avoid && f.exact_occurrences) {
    throw std::invalid_argument("GenerationFilter: avoid and exact_occurrences are exclusive");
  }
}

}  // namespace

PermutationStream::PermutationStream(GenerationFilter filter)
    : filter_(std::move(filter)), n_(static_cast<int>(filter_.length)) {
  validate(filter_);
  if (filter_.avoid) {
    tracked_ = filter_.avoid;
  } else if (filter_.exact_occurrences) {
    tracked_ = filter_.exact_occurrences->pattern;
    target_ = filter_.exact_occurrences->count;
  }
  prefix_.reserve(filter_.length);
  used_.assign(filter_.length + 2, 0);
  next_value_.assign(filter_.length + 1, 1);
  occ_.assign(filter_.length + 1, 0);
}

PermutationStream::PermutationStream(GenerationFilter filter, int first)
    : PermutationStream(std::move(filter)) {
  first_ = first;
}

bool PermutationStream::admissible(std::size_t depth, int value) const {
  const auto last = static_cast<std::size_t>(n_ - 1);
  if (depth == 0) {
    if (first_ && value != *first_) return false;
    if (filter_.begins_with_smallest && (value == 1) != *filter_.begins_with_smallest)
      return false;
  } else {
    const bool rise = prefix_[depth - 1] < value;
    const bool want_rise =
        ((depth - 1) % 2 == 0) == (filter_.alternation == AlternationClass::UpDown);
    if (rise != want_rise) return false;
  }
  if (filter_.ends_in_largest) {
    if (*filter_.ends_in_largest) {
      if ((value == n_) != (depth == last)) return false;
    } else if (depth == last && value == n_) {
      return false;
    }
  }
  return true;
}

bool PermutationStream::leaf_accepts() const {
  return !tracked_ || occ_[prefix_.size()] == target_;
}

bool PermutationStream::advance() {
  if (done_) return false;
  if (n_ == 0) {
    done_ = true;
    // The empty permutation neither begins with its smallest nor ends in its
    // largest entry.
    if (filter_.ends_in_largest.value_or(false)) return false;
    if (filter_.begins_with_smallest.value_or(false)) return false;
    if (first_) return false;
    return !tracked_ || target_ == 0 || tracked_->size() == 0;
  }
  while (depth_ >= 0) {
    const auto d = static_cast<std::size_t>(depth_);
    if (prefix_.size() > d) {
      used_[prefix_.back()] = 0;
      prefix_.pop_back();
    }
    bool placed = false;
    for (int v = next_value_[d]; v <= n_; ++v) {
      if (used_[v] || !admissible(d, v)) continue;
      next_value_[d] = v + 1;
      prefix_.push_back(v);
      std::uint64_t occ = 0;
      if (tracked_) {
        occ = (d == 0 ? 0 : occ_[d]) +
              count_occurrences_ending_last(std::span<const int>(prefix_), *tracked_);
        if (occ > target_) {
          prefix_.pop_back();
          continue;
        }
      }
      occ_[d + 1] = occ;
      used_[v] = 1;
      placed = true;
      break;
    }
    if (!placed) {
      next_value_[d] = 1;
      --depth_;
      continue;
    }
    if (d + 1 == static_cast<std::size_t>(n_)) {
      if (leaf_accepts()) return true;
      continue;
    }
    ++depth_;
  }
  done_ = true;
  return false;
}

std::optional<Permutation> PermutationStream::next() {
  if (!advance()) return std::nullopt;
  return Permutation(Permutation::Trusted{}, prefix_);
}

PermutationStream generate(const GenerationFilter& filter) { return PermutationStream(filter); }

std::vector<Permutation> generate_all(const GenerationFilter& filter) {
  std::vector<Permutation> out;
  PermutationStream stream(filter);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

BigCount count(const GenerationFilter& filter) {
  validate(filter);
  const auto n = filter.length;
  if (n < kParallelThreshold) {
    PermutationStream stream(filter);
    std::uint64_t total = 0;
    while (stream.advance()) ++total;
    return BigCount(total);
  }
  // One slice per first entry; results are summed in slice order.
  std::vector<std::uint64_t> slices(n, 0);
  const auto workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), std::size_t{1}, n);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t first = w; first < n; first += workers) {
          PermutationStream stream(filter, static_cast<int>(first + 1));
          std::uint64_t total = 0;
          while (stream.advance()) ++total;
          slices[first] = total;
        }
      });
    }
  }
  BigCount total = 0;
  for (auto s : slices) total += s;
  return total;
}

BigCount euler_zigzag(std::size_t n) {
  // Seidel-Entringer triangle: row k holds E(k, 0..k) with E(k, 0) = 0 for
  // k > 0 and E(k, m) = E(k, m - 1) + E(k - 1, k - m).
  std::vector<BigCount> row{1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<BigCount> next(k + 1);
    next[0] = 0;
    for (std::size_t m = 1; m <= k; ++m) next[m] = next[m - 1] + row[k - m];
    row = std::move(next);
  }
  return row.back();
}

BigCount table1_oracle(AlternationClass c, std::size_t n, Statistic statistic) {
  GenerationFilter f;
  f.alternation = c;
  f.length = n;
  f.avoid = pattern_321();
  if (statistic == Statistic::EndsInLargest) f.ends_in_largest = true;
  if (statistic == Statistic::BeginsWithSmallest) f.begins_with_smallest = true;
  return count(f);
}

}  // namespace altperm
