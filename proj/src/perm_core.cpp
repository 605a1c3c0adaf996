#include "altperm/perm_core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace altperm {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  std::vector<char> seen(n + 1, 0);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("permutation value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[v]) throw std::invalid_argument("repeated permutation value " + std::to_string(v));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(Trusted{}, std::move(e));
}

int Permutation::at(std::size_t position) const {
  if (position < 1 || position > entries_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(entries_.size()));
  }
  return entries_[position - 1];
}

Pattern::Pattern(Permutation letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("pattern must have length >= 1");
}

const Pattern& pattern_321() {
  static const Pattern p{Permutation({3, 2, 1})};
  return p;
}

const Pattern& pattern_123() {
  static const Pattern p{Permutation({1, 2, 3})};
  return p;
}

AlternationClass opposite(AlternationClass c) noexcept {
  return c == AlternationClass::UpDown ? AlternationClass::DownUp : AlternationClass::UpDown;
}

bool is_alternating(std::span<const int> values, AlternationClass c) noexcept {
  // With 0-based index t, UpDown rises at even t.
  const bool rise_first = c == AlternationClass::UpDown;
  for (std::size_t t = 0; t + 1 < values.size(); ++t) {
    const bool rise = values[t] < values[t + 1];
    if (rise != ((t % 2 == 0) == rise_first)) return false;
  }
  return true;
}

ClassSet classify(const Permutation& w) {
  return {is_alternating(w.entries(), AlternationClass::UpDown),
          is_alternating(w.entries(), AlternationClass::DownUp)};
}

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

// Depth-first subsequence matcher. Each extension is checked against every
// earlier chosen letter, so any partial match is order-isomorphic to the
// corresponding pattern prefix. `visit` returns false to stop the search.
template <class Visit>
class Matcher {
 public:
  Matcher(std::span<const int> values, std::span<const int> pattern, bool anchor_last,
          Visit& visit)
      : values_(values), pattern_(pattern), anchor_last_(anchor_last), visit_(visit),
        chosen_(pattern.size()) {}

  void run() {
    if (pattern_.size() > values_.size() || pattern_.empty()) return;
    extend(0, 0);
  }

 private:
  bool compatible(std::size_t depth, std::size_t pos) const {
    for (std::size_t e = 0; e < depth; ++e) {
      if (sign(values_[chosen_[e]] - values_[pos]) != sign(pattern_[e] - pattern_[depth]))
        return false;
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool extend(std::size_t depth, std::size_t from) {
    const std::size_t n = values_.size();
    const std::size_t k = pattern_.size();
    if (depth == k) return visit_(std::span<const std::size_t>(chosen_));
    // Inclusive bound that leaves room for the remaining letters; with an
    // anchor the final letter is pinned to n - 1 and the bound is unchanged.
    const std::size_t hi = n - (k - depth);
    const std::size_t lo = anchor_last_ && depth + 1 == k ? n - 1 : from;
    for (std::size_t pos = lo; pos <= hi; ++pos) {
      if (!compatible(depth, pos)) continue;
      chosen_[depth] = pos;
      if (!extend(depth + 1, pos + 1)) return false;
    }
    return true;
  }

  std::span<const int> values_;
  std::span<const int> pattern_;
  bool anchor_last_;
  Visit& visit_;
  std::vector<std::size_t> chosen_;
};

template <class Visit>
void match(std::span<const int> values, const Pattern& p, bool anchor_last, Visit visit) {
  Matcher<Visit> m(values, p.letters().entries(), anchor_last, visit);
  m.run();
}

}  // namespace

std::uint64_t count_occurrences_in(std::span<const int> values, const Pattern& p) {
  std::uint64_t total = 0;
  match(values, p, false, [&](std::span<const std::size_t>) {
    ++total;
    return true;
  });
  return total;
}

std::uint64_t count_occurrences_ending_last(std::span<const int> values, const Pattern& p) {
  std::uint64_t total = 0;
  match(values, p, true, [&](std::span<const std::size_t>) {
    ++total;
    return true;
  });
  return total;
}

BigCount count_occurrences(const Permutation& w, const Pattern& p) {
  return BigCount(count_occurrences_in(w.entries(), p));
}

std::vector<Occurrence> find_occurrences(const Permutation& w, const Pattern& p,
                                         std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("find_occurrences: limit must be >= 1");
  std::vector<Occurrence> found;
  match(w.entries(), p, false, [&](std::span<const std::size_t> chosen) {
    Occurrence occ;
    occ.positions.reserve(chosen.size());
    for (auto pos : chosen) occ.positions.push_back(pos + 1);
    found.push_back(std::move(occ));
    return found.size() < limit;
  });
  return found;
}

Permutation reverse(const Permutation& w) {
  std::vector<int> e(w.entries_.rbegin(), w.entries_.rend());
  return Permutation(Permutation::Trusted{}, std::move(e));
}

Permutation complement(const Permutation& w) {
  const int top = static_cast<int>(w.size()) + 1;
  std::vector<int> e;
  e.reserve(w.size());
  for (int v : w.entries_) e.push_back(top - v);
  return Permutation(Permutation::Trusted{}, std::move(e));
}

Permutation standardize(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw std::invalid_argument("standardize: repeated value " +
                                  std::to_string(values[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return Permutation(Permutation::Trusted{}, std::move(ranks));
}

BoundaryStatistics boundary_statistics(const Permutation& w) {
  if (w.empty()) throw std::invalid_argument("boundary_statistics: empty permutation");
  const auto e = w.entries();
  return {e.back() == static_cast<int>(e.size()), e.front() == 1};
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) return Permutation{};
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                          : comma - start);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed permutation text '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(w.entries()[t]);
  }
  return out;
}

AlternationClass parse_class(std::string_view text) {
  if (text == "UD") return AlternationClass::UpDown;
  if (text == "DU") return AlternationClass::DownUp;
  throw std::invalid_argument("unknown alternation class '" + std::string(text) +
                              "' (expected UD or DU)");
}

std::string_view class_name(AlternationClass c) noexcept {
  return c == AlternationClass::UpDown ? "UD" : "DU";
}

}  // namespace altperm
