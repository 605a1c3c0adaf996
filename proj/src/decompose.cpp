#include "altperm/decompose.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "altperm/formulas.hpp"

namespace altperm {

NotExactlyOne::NotExactlyOne(std::uint64_t found)
    : std::invalid_argument("expected exactly one 321 occurrence, found " +
                            std::to_string(found)),
      found_(found) {}

Occurrence locate_unique_321(const Permutation& w) {
  auto found = find_occurrences(w, pattern_321(), 2);
  if (found.size() != 1) {
    throw NotExactlyOne(count_occurrences_in(w.entries(), pattern_321()));
  }
  return std::move(found.front());
}

namespace {

bool avoids_321(const Permutation& w) {
  return find_occurrences(w, pattern_321(), 1).empty();
}

std::string describe(const Permutation& w) { return "[" + format_permutation(w) + "]"; }

}  // namespace

DecompositionRecord split(const Permutation& w) {
  const auto classes = classify(w);
  if (classes.empty()) throw NotAlternating("permutation " + describe(w) + " is not alternating");
  const auto host = classes.up_down ? AlternationClass::UpDown : AlternationClass::DownUp;

  const auto occ = locate_unique_321(w);
  const std::size_t i = occ.positions[0];
  const std::size_t j = occ.positions[1];
  const std::size_t k = occ.positions[2];
  const int middle = w.at(j);

  for (std::size_t t = 1; t < j; ++t) {
    if (t != i && w.at(t) > middle) {
      throw InvariantViolation(describe(w) + ": prefix entry at " + std::to_string(t) +
                               " exceeds the middle entry");
    }
  }
  for (std::size_t t = j + 1; t <= w.size(); ++t) {
    if (t != k && w.at(t) < middle) {
      throw InvariantViolation(describe(w) + ": suffix entry at " + std::to_string(t) +
                               " is below the middle entry");
    }
  }

  const auto e = w.entries();
  std::vector<int> u_values(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(j - 1));
  u_values.push_back(w.at(k));
  std::vector<int> v_values{w.at(i)};
  v_values.insert(v_values.end(), e.begin() + static_cast<std::ptrdiff_t>(j), e.end());

  DecompositionRecord record{w.size(), host, j, standardize(u_values), standardize(v_values)};
  if (!avoids_321(record.u) || !avoids_321(record.v)) {
    throw InvariantViolation(describe(w) + ": a piece contains 321");
  }
  if (auto why = record_violation(record)) {
    throw InvariantViolation(describe(w) + ": " + *why);
  }
  return record;
}

std::optional<std::string> record_violation(const DecompositionRecord& r) {
  if (r.n < 3) return "n must be >= 3";
  if (r.j < 2 || r.j + 1 > r.n) return "j must lie in 2..n-1";
  if (r.u.size() != r.j) return "U must have length j";
  if (r.v.size() != r.n - r.j + 1) return "V must have length n-j+1";
  if (!avoids_321(r.u)) return "U contains 321";
  if (!avoids_321(r.v)) return "V contains 321";
  if (!is_alternating(r.u.entries(), r.alternation)) {
    return "U is not " + std::string(class_name(r.alternation));
  }
  const auto v_class = suffix_class(r.alternation, r.j);
  if (!is_alternating(r.v.entries(), v_class)) {
    return "V is not " + std::string(class_name(v_class));
  }
  if (boundary_statistics(r.u).ends_in_largest) return "U ends in its largest entry";
  if (boundary_statistics(r.v).begins_with_smallest) return "V begins with its smallest entry";
  return std::nullopt;
}

Permutation reconstruct(const DecompositionRecord& r) {
  if (auto why = record_violation(r)) throw InvalidRecord("invalid record: " + *why);

  const auto j = static_cast<int>(r.j);
  const auto u = r.u.entries();
  const auto v = r.v.entries();
  const auto largest_u = std::max_element(u.begin(), u.end());
  const auto i = static_cast<std::size_t>(largest_u - u.begin()) + 1;
  const auto k = r.j - 1 + static_cast<std::size_t>(std::min_element(v.begin(), v.end()) -
                                                    v.begin()) + 1;

  // The values below the middle entry are exactly the non-maximal u entries,
  // so the middle entry is j, w_k is U's last rank and w_i = j - 1 + V_1.
  std::vector<int> w(r.n);
  for (std::size_t t = 1; t < r.j; ++t) w[t - 1] = u[t - 1];
  w[i - 1] = j - 1 + v.front();
  w[r.j - 1] = j;
  for (std::size_t t = 2; t <= v.size(); ++t) w[r.j + t - 2] = j - 1 + v[t - 1];
  w[k - 1] = u.back();

  Permutation host;
  try {
    host = Permutation(std::move(w));
    const auto back = split(host);
    if (back != r) throw InternalInconsistency("split does not return the original record");
    if (host.at(r.j) != j) throw InternalInconsistency("middle entry differs from j");
  } catch (const InternalInconsistency&) {
    throw;
  } catch (const std::exception& ex) {
    throw InternalInconsistency("reconstruct(" + format_record(r) + "): " + ex.what());
  }
  return host;
}

DecompositionStream::DecompositionStream(std::size_t n, AlternationClass host)
    : n_(n), host_(host) {}

GenerationFilter DecompositionStream::u_filter() const {
  GenerationFilter f;
  f.alternation = host_;
  f.length = j_;
  f.avoid = pattern_321();
  f.ends_in_largest = false;
  return f;
}

GenerationFilter DecompositionStream::v_filter() const {
  GenerationFilter f;
  f.alternation = suffix_class(host_, j_);
  f.length = n_ - j_ + 1;
  f.avoid = pattern_321();
  f.begins_with_smallest = false;
  return f;
}

bool DecompositionStream::advance_pieces() {
  while (j_ + 1 <= n_) {
    if (!u_stream_) {
      u_stream_.emplace(u_filter());
      u_.reset();
    }
    if (!u_) {
      u_ = u_stream_->next();
      if (!u_) {
        u_stream_.reset();
        ++j_;
        continue;
      }
      v_stream_.emplace(v_filter());
    }
    if (auto v = v_stream_->next()) {
      record_ = {n_, host_, j_, *u_, std::move(*v)};
      return true;
    }
    u_.reset();
  }
  return false;
}

std::optional<Permutation> DecompositionStream::next() {
  if (!advance_pieces()) return std::nullopt;
  return reconstruct(record_);
}

DecompositionStream enumerate_by_decomposition(std::size_t n, AlternationClass host) {
  return DecompositionStream(n, host);
}

std::string format_record(const DecompositionRecord& r) {
  return "n=" + std::to_string(r.n) + ";class=" + std::string(class_name(r.alternation)) +
         ";j=" + std::to_string(r.j) + ";U=" + format_permutation(r.u) +
         ";V=" + format_permutation(r.v);
}

namespace {

std::string_view expect_field(std::string_view& rest, std::string_view key, bool last) {
  if (rest.substr(0, key.size()) != key || rest.size() <= key.size() ||
      rest[key.size()] != '=') {
    throw std::invalid_argument("record text: expected field '" + std::string(key) + "'");
  }
  rest.remove_prefix(key.size() + 1);
  const auto semi = rest.find(';');
  if (last) {
    if (semi != std::string_view::npos) throw std::invalid_argument("record text: trailing data");
    auto value = rest;
    rest = {};
    return value;
  }
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("record text: missing field after '" + std::string(key) + "'");
  }
  auto value = rest.substr(0, semi);
  rest.remove_prefix(semi + 1);
  return value;
}

std::size_t parse_size(std::string_view text, std::string_view key) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("record text: malformed " + std::string(key) + " '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

DecompositionRecord parse_record(std::string_view text) {
  auto rest = text;
  DecompositionRecord r;
  r.n = parse_size(expect_field(rest, "n", false), "n");
  r.alternation = parse_class(expect_field(rest, "class", false));
  r.j = parse_size(expect_field(rest, "j", false), "j");
  r.u = parse_permutation(expect_field(rest, "U", false));
  r.v = parse_permutation(expect_field(rest, "V", true));
  return r;
}

}  // namespace altperm
