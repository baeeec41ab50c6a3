#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "alcs/approx_lcs.hpp"
#include "alcs/errors.hpp"
#include "alcs/harness/audit.hpp"
#include "alcs/harness/bench.hpp"
#include "alcs/harness/checks.hpp"
#include "alcs/harness/suite.hpp"
#include "alcs/oracle/oracles.hpp"
#include "json.hpp"

namespace {

using namespace alcs;

BitString read_string(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return BitString::parse(ss.str());
}

Mode to_mode(const std::string& s) {
  const auto m = parse_mode(s);
  if (!m) throw ParameterError("unknown mode '" + s + "'");
  return *m;
}

nlohmann::json params_json(const ReductionParams& p) {
  return {{"n", p.n},
          {"alpha", p.alpha},
          {"beta", to_string(p.beta)},
          {"beta_n", to_string(p.beta_n)},
          {"gamma", to_string(p.gamma)},
          {"delta", to_string(p.delta)},
          {"c", to_string(p.c)},
          {"epsilon", to_string(p.epsilon)},
          {"degenerate_threshold", p.degenerate_threshold}};
}

int cmd_run(const std::string& a_path, const std::string& b_path, const std::string& est,
            const std::string& mode, bool json) {
  const BitString a = read_string(a_path);
  const BitString b = read_string(b_path);
  const auto estimator = make_estimator(est);
  const ApproxLcsResult r = approx_lcs(a, b, *estimator, to_mode(mode));
  if (json) {
    nlohmann::json j = {{"lcs_estimate", r.witness.size()},
                        {"witness_a", r.witness.a_indices},
                        {"witness_b", r.witness.b_indices},
                        {"branch", harness::to_json(r.report)},
                        {"params", r.params ? params_json(*r.params) : nlohmann::json(nullptr)},
                        {"fact1_upper", r.report.upper_bound}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "lcs_estimate " << r.witness.size() << '\n'
              << "branch " << branch_name(r.report.branch) << '\n'
              << "fact1_upper " << r.report.upper_bound << '\n'
              << "subsequence " << witness_string(a, r.witness) << '\n';
  }
  return 0;
}

int cmd_audit(const std::string& suite, const std::string& est, const std::string& mode,
              const std::string& out_path, bool timing) {
  const auto specs = harness::load_suite(suite, harness::seed_from_env());
  harness::AuditOptions options{to_mode(mode), timing};
  harness::AuditSummary s;
  if (out_path.empty() || out_path == "-") {
    s = harness::audit(specs, est, options, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    s = harness::audit(specs, est, options, out);
  }
  std::cerr << "audited " << s.instances << " instances, " << s.violating_instances
            << " with violations\n";
  return s.ok() ? 0 : 1;
}

int cmd_bench(const std::vector<std::size_t>& n, std::size_t reps, const std::string& est,
              const std::string& mode) {
  harness::write_csv(std::cout, harness::bench(n, est, reps, to_mode(mode)));
  return 0;
}

// All pairs of equal length up to max_len against the oracles.
int cmd_selftest(std::size_t max_len) {
  std::size_t checked = 0, failed = 0;
  for (const char* sel : {"exact", "adversarial:2", "adversarial:5:0"}) {
    const auto estimator = make_estimator(sel);
    for (std::size_t n = 0; n <= max_len; ++n) {
      for (std::uint64_t idx = 0; idx < (1ULL << (2 * n)); ++idx) {
        harness::InstanceSpec spec;
        spec.generator = harness::GeneratorKind::exhaustive;
        spec.n = n;
        spec.seed = idx;
        const StringPair p = harness::generate(spec);
        const std::size_t lcs = oracle::lcs_length(p.a, p.b);
        bool bad = n <= 6 && oracle::lcs_bruteforce(p.a, p.b) != lcs;
        for (std::optional<std::size_t> t : {std::optional<std::size_t>{}, std::optional<std::size_t>{0}}) {
          EngineOptions o;
          o.degenerate_threshold = t;
          const ApproxLcsResult r = approx_lcs(p.a, p.b, *estimator, o);
          bad = bad || !harness::check_result(p.a, p.b, r, lcs).empty();
        }
        ++checked;
        if (bad) {
          ++failed;
          if (failed <= 10) {
            std::cerr << "selftest failure: " << sel << " a=" << p.a.to_string()
                      << " b=" << p.b.to_string() << '\n';
          }
        }
      }
    }
  }
  std::cout << "selftest: " << checked << " pairs, " << failed << " failures\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate binary LCS via an edit-distance estimator"};
  app.require_subcommand(1);

  std::string a_path, b_path, estimator = "exact", mode = "paper";
  bool json = false;
  auto* run = app.add_subcommand("run", "approximate LCS of two string files");
  run->add_option("--a", a_path, "file holding A")->required();
  run->add_option("--b", b_path, "file holding B")->required();
  run->add_option("--estimator", estimator, "exact | adversarial:<c>[:<slack exponent>]");
  run->add_option("--mode", mode, "paper | ensemble");
  run->add_flag("--json", json, "emit a JSON object");

  std::string suite, out_path;
  bool timing = false;
  auto* aud = app.add_subcommand("audit", "run a suite against the exact oracle");
  aud->add_option("--suite", suite, "suite JSON file")->required();
  aud->add_option("--estimator", estimator);
  aud->add_option("--mode", mode);
  aud->add_option("--out", out_path, "JSON-lines report path (default stdout)");
  aud->add_flag("--timing", timing, "record per-instance wall time");

  std::vector<std::size_t> ns;
  std::size_t reps = 5;
  auto* ben = app.add_subcommand("bench", "timing table as CSV");
  ben->add_option("--n", ns, "lengths")->required()->delimiter(',');
  ben->add_option("--reps", reps, "repetitions per length");
  ben->add_option("--estimator", estimator);
  ben->add_option("--mode", mode);

  std::size_t max_len = 6;
  auto* self = app.add_subcommand("selftest", "exhaustive small-instance checks");
  self->add_option("--max-len", max_len, "largest length enumerated")->check(CLI::Range(0, 12));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(a_path, b_path, estimator, mode, json);
    if (*aud) return cmd_audit(suite, estimator, mode, out_path, timing);
    if (*ben) return cmd_bench(ns, reps, estimator, mode);
    if (*self) return cmd_selftest(max_len);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
