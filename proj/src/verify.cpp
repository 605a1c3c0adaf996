#include "altperm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "altperm/decompose.hpp"
#include "altperm/enumerate.hpp"
#include "altperm/formulas.hpp"

namespace altperm {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
  }

  template <class A, class B>
  bool expect_equal(std::size_t n, const std::string& inputs, const A& expected, const B& actual) {
    ++report_.checks;
    if (expected == actual) return true;
    fail(n, inputs, to_text(expected), to_text(actual));
    return false;
  }

  bool expect(bool ok, std::size_t n, const std::string& inputs, const std::string& expected,
              const std::string& actual) {
    ++report_.checks;
    if (!ok) fail(n, inputs, expected, actual);
    return ok;
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  bool failed() const { return report_.failure.has_value(); }

  SuiteReport finish() {
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    return std::move(report_);
  }

 private:
  static std::string to_text(const BigCount& v) { return v.str(); }
  static std::string to_text(const Permutation& w) { return format_permutation(w); }
  static std::string to_text(const std::string& s) { return s; }
  static std::string to_text(bool b) { return b ? "true" : "false"; }
  static std::string to_text(std::size_t v) { return std::to_string(v); }

  void fail(std::size_t n, const std::string& inputs, std::string expected, std::string actual) {
    if (!report_.failure) {
      report_.failure = Counterexample{n, inputs, std::move(expected), std::move(actual)};
    }
  }

  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

GenerationFilter exactly_once_filter(AlternationClass c, std::size_t n, const Pattern& p) {
  GenerationFilter f;
  f.alternation = c;
  f.length = n;
  f.exact_occurrences = OccurrenceConstraint{p, 1};
  return f;
}

std::string family(SequencePattern p, AlternationClass c) {
  return "pattern=" + std::string(sequence_pattern_name(p)) + " class=" +
         std::string(class_name(c));
}

const char* statistic_name(Statistic s) {
  switch (s) {
    case Statistic::Total: return "total";
    case Statistic::EndsInLargest: return "ends_in_largest";
    case Statistic::BeginsWithSmallest: return "begins_with_smallest";
  }
  return "?";
}

// Membership conditions for a unique 321 at (i, j, k), checked directly on
// the host rather than through split.
bool bullet_conditions_hold(const Permutation& w, const Occurrence& occ) {
  const auto i = occ.positions[0], j = occ.positions[1], k = occ.positions[2];
  std::vector<int> u, v{w.at(i)};
  for (std::size_t t = 1; t <= w.size(); ++t) {
    if (t < j && t != i && w.at(t) > w.at(j)) return false;
    if (t > j && t != k && w.at(t) < w.at(j)) return false;
    if (t < j) u.push_back(w.at(t));
    if (t > j) v.push_back(w.at(t));
  }
  u.push_back(w.at(k));
  return count_occurrences_in(u, pattern_321()) == 0 &&
         count_occurrences_in(v, pattern_321()) == 0;
}

}  // namespace

SuiteReport verify_exactly_once(std::size_t n_max) {
  Recorder rec("exactly_once");
  for (std::size_t n = 3; n <= n_max && !rec.failed(); ++n) {
    for (auto c : {AlternationClass::UpDown, AlternationClass::DownUp}) {
      for (auto p : {SequencePattern::P321, SequencePattern::P123}) {
        const auto oracle = count(exactly_once_filter(c, n, as_pattern(p)));
        rec.expect_equal(n, family(p, c) + " method=closed_form", oracle,
                         exactly_once_count({p, c}, n));
        if (p == SequencePattern::P321) {
          rec.expect_equal(n, family(p, c) + " method=decomposition_sum", oracle,
                           decomposition_sum(n, c));
        }
      }
    }
  }
  return rec.finish();
}

SuiteReport verify_table(std::size_t n_max) {
  Recorder rec("table");
  for (const auto& row : table1_rows()) {
    const std::size_t first = row.parity == Parity::Even ? 0 : 1;
    for (std::size_t n = first; n <= n_max; n += 2) {
      const auto oracle = table1_oracle(row.alternation, n, row.statistic);
      const std::string inputs = "class=" + std::string(class_name(row.alternation)) +
                                 " statistic=" + statistic_name(row.statistic);
      if (n / 2 >= row.valid_from) {
        rec.expect_equal(n, inputs, table1_formula(row.alternation, n, row.statistic), oracle);
      } else {
        rec.note(inputs + " n=" + std::to_string(n) + " oracle_only=" + oracle.str());
      }
    }
  }
  return rec.finish();
}

SuiteReport verify_identities(std::size_t m_max, std::size_t sum_n_max,
                              std::size_t oracle_n_max) {
  Recorder rec("identities");
  for (std::size_t m = 1; m <= m_max && !rec.failed(); ++m) {
    rec.expect_equal(2 * m + 1, "m=" + std::to_string(m) + " convolution_odd_321",
                     closed_form_odd(m), convolution_odd_321(m));
    if (m >= 2) {
      rec.expect_equal(2 * m, "m=" + std::to_string(m) + " convolution_even_321",
                       closed_form_even_321(m), convolution_even_321(m));
    }
  }
  for (std::size_t n = 3; n <= sum_n_max && !rec.failed(); ++n) {
    for (auto c : {AlternationClass::UpDown, AlternationClass::DownUp}) {
      const auto sum = decomposition_sum(n, c);
      rec.expect_equal(n, family(SequencePattern::P321, c) + " decomposition_sum vs closed_form",
                       exactly_once_count({SequencePattern::P321, c}, n), sum);
      if (n <= oracle_n_max) {
        rec.expect_equal(n, family(SequencePattern::P321, c) + " decomposition_sum vs oracle",
                         count(exactly_once_filter(c, n, pattern_321())), sum);
      }
    }
  }
  return rec.finish();
}

SuiteReport verify_bijection(std::size_t n_max) {
  Recorder rec("bijection");
  for (std::size_t n = 3; n <= n_max && !rec.failed(); ++n) {
    for (auto c : {AlternationClass::UpDown, AlternationClass::DownUp}) {
      const std::string inputs = "class=" + std::string(class_name(c));
      std::set<Permutation> built;
      std::size_t records = 0;
      auto stream = enumerate_by_decomposition(n, c);
      while (auto w = stream.next()) {
        ++records;
        const auto& r = stream.current();
        if (!rec.expect(!record_violation(r), n, inputs + " record=" + format_record(r),
                        "valid record", "violates invariants"))
          break;
        if (!rec.expect_equal(n, inputs + " split(reconstruct(record))", format_record(r),
                              format_record(split(*w))))
          break;
        if (!rec.expect(built.insert(*w).second, n, inputs, "distinct output",
                        "duplicate " + format_permutation(*w)))
          break;
      }
      if (rec.failed()) break;

      const auto oracle = generate_all(exactly_once_filter(c, n, pattern_321()));
      const std::set<Permutation> expected(oracle.begin(), oracle.end());
      rec.expect_equal(n, inputs + " |records| vs decomposition_sum", decomposition_sum(n, c),
                       BigCount(records));
      if (!rec.expect(expected == built, n, inputs + " output set",
                      std::to_string(expected.size()) + " oracle hosts",
                      std::to_string(built.size()) + " reconstructed hosts"))
        break;
      for (const auto& w : oracle) {
        const auto r = split(w);
        rec.expect_equal(n, inputs + " reconstruct(split(w))", w, reconstruct(r));
        rec.expect(w.at(r.j) == static_cast<int>(r.j), n, inputs + " w=" + format_permutation(w),
                   "w_j = j", "w_j = " + std::to_string(w.at(r.j)));
        rec.expect(bullet_conditions_hold(w, locate_unique_321(w)), n,
                   inputs + " w=" + format_permutation(w), "membership conditions hold",
                   "condition fails");
        if (rec.failed()) break;
      }
    }
  }
  return rec.finish();
}

SuiteReport verify_zigzag(std::size_t n_max) {
  Recorder rec("zigzag");
  for (std::size_t n = 0; n <= n_max && !rec.failed(); ++n) {
    const auto expected = euler_zigzag(n);
    for (auto c : {AlternationClass::UpDown, AlternationClass::DownUp}) {
      GenerationFilter f;
      f.alternation = c;
      f.length = n;
      rec.expect_equal(n, "class=" + std::string(class_name(c)), expected, count(f));
    }
  }
  return rec.finish();
}

SuiteReport verify_symmetry(std::size_t n_max) {
  Recorder rec("symmetry");
  for (std::size_t n = 0; n <= n_max && !rec.failed(); ++n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    do {
      const Permutation w(e);
      const auto r = reverse(w);
      const auto a = count_occurrences_in(w.entries(), pattern_123());
      const auto b = count_occurrences_in(r.entries(), pattern_321());
      if (!rec.expect(a == b, n, "w=" + format_permutation(w), std::to_string(a),
                      std::to_string(b)))
        break;
      const auto cw = classify(w);
      const auto cr = classify(r);
      const bool class_rule =
          n % 2 == 1 ? cw == cr
                     : (cw.up_down == cr.down_up && cw.down_up == cr.up_down);
      if (!rec.expect(class_rule, n, "classify w=" + format_permutation(w),
                      "reversal class rule", "violated"))
        break;
    } while (std::next_permutation(e.begin(), e.end()));

    if (n % 2 == 0 && n >= 2 && !rec.failed()) {
      std::set<Permutation> reversed;
      for (const auto& w : generate_all(exactly_once_filter(AlternationClass::UpDown, n,
                                                            pattern_123())))
        reversed.insert(reverse(w));
      const auto target =
          generate_all(exactly_once_filter(AlternationClass::DownUp, n, pattern_321()));
      rec.expect(reversed == std::set<Permutation>(target.begin(), target.end()), n,
                 "reverse(UD exactly-one-123)", std::to_string(target.size()) + " DU hosts",
                 std::to_string(reversed.size()) + " reversed hosts");
    }
  }
  return rec.finish();
}

}  // namespace altperm
