#include <set>

#include "altperm/enumerate.hpp"
#include "brute_force.hpp"
#include "doctest.h"

using namespace altperm;

namespace {

std::vector<std::string> texts(const std::vector<Permutation>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(format_permutation(w));
  return out;
}

GenerationFilter make(AlternationClass c, std::size_t n) {
  GenerationFilter f;
  f.alternation = c;
  f.length = n;
  return f;
}

}  // namespace

TEST_CASE("generate examples") {
  using S = std::vector<std::string>;
  auto ud4 = make(AlternationClass::UpDown, 4);
  CHECK(texts(generate_all(ud4)) == S{"1,3,2,4", "1,4,2,3", "2,3,1,4", "2,4,1,3", "3,4,1,2"});

  auto du4 = make(AlternationClass::DownUp, 4);
  du4.avoid = pattern_321();
  CHECK(texts(generate_all(du4)) == S{"2,1,4,3", "3,1,4,2"});

  auto once123 = make(AlternationClass::UpDown, 4);
  once123.exact_occurrences = OccurrenceConstraint{pattern_123(), 1};
  CHECK(texts(generate_all(once123)) == S{"1,4,2,3", "2,3,1,4"});
}

TEST_CASE("stream is lazy and single pass") {
  auto stream = generate(make(AlternationClass::UpDown, 4));
  CHECK(format_permutation(*stream.next()) == "1,3,2,4");
  CHECK(format_permutation(*stream.next()) == "1,4,2,3");
  int rest = 0;
  while (stream.next()) ++rest;
  CHECK(rest == 3);
  CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("count examples") {
  auto f = make(AlternationClass::UpDown, 6);
  f.exact_occurrences = OccurrenceConstraint{pattern_321(), 1};
  CHECK(count(f) == 12);
  CHECK(count(make(AlternationClass::UpDown, 5)) == 16);
  auto g = make(AlternationClass::UpDown, 2);
  g.avoid = pattern_321();
  g.ends_in_largest = false;
  CHECK(count(g) == 0);
}

TEST_CASE("avoid and exact_occurrences are exclusive") {
  auto f = make(AlternationClass::UpDown, 3);
  f.avoid = pattern_321();
  f.exact_occurrences = OccurrenceConstraint{pattern_321(), 0};
  CHECK_THROWS_AS(generate(f), std::invalid_argument);
  CHECK_THROWS_AS(count(f), std::invalid_argument);
}

TEST_CASE("empty and singleton lengths") {
  auto e = make(AlternationClass::DownUp, 0);
  CHECK(generate_all(e).size() == 1);
  e.ends_in_largest = true;
  CHECK(generate_all(e).empty());
  auto one = make(AlternationClass::UpDown, 1);
  one.begins_with_smallest = true;
  one.ends_in_largest = true;
  CHECK(texts(generate_all(one)) == std::vector<std::string>{"1"});
  auto once = make(AlternationClass::UpDown, 0);
  once.exact_occurrences = OccurrenceConstraint{pattern_321(), 1};
  CHECK(count(once) == 0);
}

TEST_CASE("euler_zigzag examples") {
  CHECK(euler_zigzag(0) == 1);
  CHECK(euler_zigzag(4) == 5);
  CHECK(euler_zigzag(10) == 50521);
  CHECK(count(make(AlternationClass::UpDown, 10)) == 50521);
}

TEST_CASE("table1_oracle examples") {
  CHECK(table1_oracle(AlternationClass::UpDown, 4, Statistic::Total) == 5);
  CHECK(table1_oracle(AlternationClass::UpDown, 4, Statistic::EndsInLargest) == 2);
  CHECK(table1_oracle(AlternationClass::DownUp, 4, Statistic::EndsInLargest) == 0);
}

TEST_CASE("generator matches brute-force filtering for every filter combination, n <= 7") {
  const std::vector<std::pair<brute::Seq, const Pattern*>> patterns{
      {{3, 2, 1}, &pattern_321()}, {{1, 2, 3}, &pattern_123()}};
  const std::vector<std::optional<bool>> flags{std::nullopt, true, false};
  for (int n = 0; n <= 7; ++n) {
    const auto all = brute::all_permutations(n);
    for (auto c : {AlternationClass::UpDown, AlternationClass::DownUp}) {
      for (const auto& [pseq, pattern] : patterns) {
        for (int target = -1; target <= 2; ++target) {
          for (auto ends : flags) {
            for (auto begins : flags) {
              auto f = make(c, n);
              if (target >= 0) f.exact_occurrences = OccurrenceConstraint{*pattern, std::uint64_t(target)};
              f.ends_in_largest = ends;
              f.begins_with_smallest = begins;
              std::vector<std::string> expected;
              for (const auto& w : all) {
                const bool cls = c == AlternationClass::UpDown ? brute::up_down(w) : brute::down_up(w);
                if (!cls) continue;
                if (target >= 0 && brute::count(w, pseq) != std::uint64_t(target)) continue;
                const bool e = n > 0 && w.back() == n;
                const bool b = n > 0 && w.front() == 1;
                if (ends && *ends != e) continue;
                if (begins && *begins != b) continue;
                expected.push_back(format_permutation(Permutation(w)));
              }
              // brute::all_permutations is already lexicographic.
              REQUIRE(texts(generate_all(f)) == expected);
              REQUIRE(count(f) == expected.size());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("alternating counts match the boustrophedon numbers for n <= 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(count(make(AlternationClass::UpDown, n)) == euler_zigzag(n));
    CHECK(count(make(AlternationClass::DownUp, n)) == euler_zigzag(n));
  }
}

TEST_CASE("avoid p equals exactly zero occurrences of p, n <= 10") {
  for (std::size_t n = 0; n <= 10; ++n) {
    auto a = make(AlternationClass::UpDown, n);
    a.avoid = pattern_321();
    auto b = make(AlternationClass::UpDown, n);
    b.exact_occurrences = OccurrenceConstraint{pattern_321(), 0};
    CHECK(count(a) == count(b));
  }
}

TEST_CASE("streams are sorted and duplicate-free, n <= 10") {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (auto c : {AlternationClass::UpDown, AlternationClass::DownUp}) {
      const auto ws = generate_all(make(c, n));
      REQUIRE(std::is_sorted(ws.begin(), ws.end()));
      REQUIRE(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
      REQUIRE(ws.size() == euler_zigzag(n));
    }
  }
}

TEST_CASE("partitioned count equals sequential stream length") {
  auto f = make(AlternationClass::DownUp, 10);
  f.exact_occurrences = OccurrenceConstraint{pattern_123(), 1};
  std::size_t sequential = 0;
  auto stream = generate(f);
  while (stream.advance()) ++sequential;
  CHECK(count(f) == sequential);
}
