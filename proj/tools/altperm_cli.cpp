// altperm: enumeration, closed forms and the unique-321 bijection for
// alternating permutations. Emits one JSON object per stdout line.

#include <chrono>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "altperm/decompose.hpp"
#include "altperm/enumerate.hpp"
#include "altperm/formulas.hpp"
#include "altperm/verify.hpp"
#include "json.hpp"

using namespace altperm;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerification = 2;

constexpr int kMaxLength = 100000;

// Bad flag value or input outside an operation's domain.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void emit(const std::string& command, json inputs, const std::string& value,
          const std::string& method, long long elapsed, json extra = json::object()) {
  json line;
  line["command"] = command;
  line["inputs"] = std::move(inputs);
  line["value"] = value;
  line["method"] = method;
  line["elapsed_ms"] = elapsed;
  for (auto& [k, v] : extra.items()) line[k] = v;
  std::cout << line.dump() << '\n';
}

// Host class and pattern-flip needed to express a count as one over hosts
// with exactly one 321: complementation swaps 123 with 321 and UD with DU.
AlternationClass host_class_for_321(SequencePattern p, AlternationClass c) {
  return p == SequencePattern::P321 ? c : opposite(c);
}

BigCount count_by_method(SequencePattern pattern, AlternationClass c, std::size_t n,
                         std::uint64_t exactly, const std::string& method) {
  if (method == "oracle") {
    GenerationFilter f;
    f.alternation = c;
    f.length = n;
    f.exact_occurrences = OccurrenceConstraint{as_pattern(pattern), exactly};
    return count(f);
  }
  if (exactly != 1) throw UsageError("--method", method + " supports only --exactly 1");
  if (method == "closed_form") return exactly_once_count({pattern, c}, n);
  if (method == "convolution") {
    // Reversal preserves the class at odd n, so every family reduces to
    // UD/321 there; at even n only UD/321 and DU/123 do.
    if (n % 2 == 0 && host_class_for_321(pattern, c) != AlternationClass::UpDown)
      throw UsageError("--method", "no convolution form for this family at even n");
    if (n % 2 == 0) {
      if (n < 4) throw UsageError("--n", "convolution requires n >= 4 for even n");
      return convolution_even_321(n / 2);
    }
    if (n < 3) throw UsageError("--n", "convolution requires n >= 3 for odd n");
    return convolution_odd_321(n / 2);
  }
  if (n < 3) throw UsageError("--n", method + " requires n >= 3");
  const auto host = host_class_for_321(pattern, c);
  if (method == "decomposition_sum") return decomposition_sum(n, host);
  if (method == "bijection") {
    std::uint64_t total = 0;
    auto stream = enumerate_by_decomposition(n, host);
    while (stream.next()) ++total;
    return total;
  }
  throw UsageError("--method", "unknown method '" + method + "'");
}

json report_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.name;
  j["status"] = r.passed() ? "pass" : "fail";
  j["checks"] = r.checks;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.failure) {
    j["counterexample"] = {{"n", r.failure->n},
                           {"inputs", r.failure->inputs},
                           {"expected", r.failure->expected},
                           {"actual", r.failure->actual}};
  }
  return j;
}

// Emits a suite's summary line; returns false on failure after printing the
// counterexample to stderr.
bool emit_suite(const std::string& command, json inputs, const SuiteReport& r,
                const std::string& method) {
  emit(command, std::move(inputs), std::to_string(r.checks), method,
       static_cast<long long>(r.elapsed_ms), report_json(r));
  std::cerr << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks
            << " checks, " << static_cast<long long>(r.elapsed_ms) << " ms)\n";
  if (r.failure) {
    std::cerr << "  first counterexample: n=" << r.failure->n << " " << r.failure->inputs
              << " expected=" << r.failure->expected << " actual=" << r.failure->actual << '\n';
  }
  return r.passed();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating permutations containing 321 or 123 exactly once"};
  app.require_subcommand(1);

  const std::vector<std::string> methods{"closed_form", "convolution", "decomposition_sum",
                                         "oracle", "bijection"};
  std::string pattern_text = "321", class_text = "UD", method;
  std::size_t n = 0, n_max = 10;
  std::uint64_t exactly = 1;
  std::string perm_text, record_text;

  auto add_pattern = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--pattern", pattern_text, "321 or 123")
                    ->check(CLI::IsMember({"321", "123"}));
    if (required) opt->required();
  };
  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", class_text, "UD or DU (default UD)")
        ->check(CLI::IsMember({"UD", "DU"}));
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "closed_form|convolution|decomposition_sum|oracle|bijection")
        ->check(CLI::IsMember(methods));
  };
  auto add_n_max = [&](CLI::App* sub) {
    sub->add_option("--n-max", n_max, "largest length for oracle-backed checks (default 10)")
        ->check(CLI::Range(1, kMaxLength));
  };

  auto* count_cmd = app.add_subcommand("count", "count one family at one length");
  add_pattern(count_cmd, true);
  add_class(count_cmd);
  count_cmd->add_option("--n", n, "permutation length")->required()->check(CLI::Range(1, kMaxLength));
  count_cmd->add_option("--exactly", exactly, "occurrence count (default 1)")
      ->check(CLI::NonNegativeNumber);
  add_method(count_cmd);

  auto* seq_cmd = app.add_subcommand("sequence", "values for n = 3..n-max");
  add_pattern(seq_cmd, true);
  add_class(seq_cmd);
  add_n_max(seq_cmd);
  add_method(seq_cmd);

  auto* table_cmd = app.add_subcommand("verify-table", "table formulas vs oracle");
  add_n_max(table_cmd);

  auto* ident_cmd =
      app.add_subcommand("verify-identity", "convolutions and decomposition sums vs closed forms vs oracle");
  add_n_max(ident_cmd);

  auto* dec_cmd = app.add_subcommand("decompose", "split a host into its (j, U, V) record");
  dec_cmd->add_option("--perm", perm_text, "permutation, e.g. 1,4,3,5,2,6")->required();
  add_pattern(dec_cmd, false);

  auto* rec_cmd = app.add_subcommand("reconstruct", "rebuild a host from its record");
  rec_cmd->add_option("--record", record_text, "e.g. n=6;class=UD;j=3;U=1,3,2;V=2,3,1,4")
      ->required();
  add_pattern(rec_cmd, false);

  auto* self_cmd = app.add_subcommand("selftest", "run every verification suite");
  add_n_max(self_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = Clock::now();
  try {
    const auto pattern = parse_sequence_pattern(pattern_text);
    const auto cls = parse_class(class_text);

    if (*count_cmd) {
      if (method.empty()) method = exactly == 1 ? "closed_form" : "oracle";
      const auto value = count_by_method(pattern, cls, n, exactly, method);
      emit("count", {{"pattern", pattern_text}, {"class", class_text}, {"n", n}, {"exactly", exactly}},
           to_decimal(value), method, elapsed_ms(start));
    } else if (*seq_cmd) {
      if (method.empty()) method = "closed_form";
      for (std::size_t len = 3; len <= n_max; ++len) {
        const auto t0 = Clock::now();
        const auto value = count_by_method(pattern, cls, len, 1, method);
        emit("sequence", {{"pattern", pattern_text}, {"class", class_text}, {"n", len}},
             to_decimal(value), method, elapsed_ms(t0));
      }
    } else if (*table_cmd) {
      if (!emit_suite("verify-table", {{"n_max", n_max}}, verify_table(n_max), "oracle"))
        throw VerificationFailure("table verification failed");
    } else if (*ident_cmd) {
      const auto r = verify_identities(200, 200, n_max);
      if (!emit_suite("verify-identity", {{"m_max", 200}, {"n_max", n_max}}, r, "convolution"))
        throw VerificationFailure("identity verification failed");
    } else if (*dec_cmd) {
      Permutation w;
      try {
        w = parse_permutation(perm_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError("--perm", e.what());
      }
      // Hosts with one 123 are handled through their reversal.
      const auto host = pattern == SequencePattern::P123 ? reverse(w) : w;
      DecompositionRecord r;
      try {
        r = split(host);
      } catch (const std::invalid_argument& e) {
        throw UsageError("--perm", e.what());
      }
      json extra = json::object();
      if (pattern == SequencePattern::P123) extra["transform"] = "reverse";
      emit("decompose", {{"perm", perm_text}, {"pattern", pattern_text}}, format_record(r),
           "bijection", elapsed_ms(start), extra);
    } else if (*rec_cmd) {
      Permutation w;
      try {
        w = reconstruct(parse_record(record_text));
      } catch (const std::invalid_argument& e) {
        throw UsageError("--record", e.what());
      }
      json extra = json::object();
      if (pattern == SequencePattern::P123) {
        w = reverse(w);
        extra["transform"] = "reverse";
      }
      emit("reconstruct", {{"record", record_text}, {"pattern", pattern_text}},
           format_permutation(w), "bijection", elapsed_ms(start), extra);
    } else if (*self_cmd) {
      // Oracle-backed suites run at least at their standard bounds; a larger
      // --n-max extends them.
      const auto at_least = [&](std::size_t floor) { return std::max(floor, n_max); };
      bool ok = true;
      auto run = [&](const SuiteReport& r, const std::string& method, json inputs) {
        ok = emit_suite("selftest", std::move(inputs), r, method) && ok;
      };
      run(verify_exactly_once(at_least(12)), "oracle", {{"n_max", at_least(12)}});
      run(verify_table(at_least(12)), "oracle", {{"n_max", at_least(12)}});
      run(verify_identities(200, 200, n_max), "convolution",
          {{"m_max", 200}, {"sum_n_max", 200}, {"n_max", n_max}});
      run(verify_bijection(at_least(10)), "bijection", {{"n_max", at_least(10)}});
      run(verify_zigzag(at_least(12)), "oracle", {{"n_max", at_least(12)}});
      run(verify_symmetry(8), "oracle", {{"n_max", 8}});
      if (!ok) throw VerificationFailure("selftest failed");
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    // Falsified characterization or broken inverse; never recoverable.
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerification;
  }
  return kOk;
}
