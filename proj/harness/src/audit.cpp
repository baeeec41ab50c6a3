#include "alcs/harness/audit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>

#include "alcs/harness/checks.hpp"
#include "alcs/harness/prng.hpp"
#include "alcs/harness/suite.hpp"
#include "alcs/oracle/oracles.hpp"

namespace alcs::harness {

namespace {

nlohmann::json ratio_stats(std::vector<Rational> ratios) {
  if (ratios.empty()) return {{"count", 0}, {"min_ratio", nullptr}, {"median_ratio", nullptr}};
  std::sort(ratios.begin(), ratios.end());
  return {{"count", ratios.size()},
          {"min_ratio", to_string(ratios.front())},
          {"median_ratio", to_string(ratios[(ratios.size() - 1) / 2])}};
}

}  // namespace

nlohmann::json to_json(const BranchReport& r) {
  nlohmann::json j = {{"branch", branch_name(r.branch)},
                      {"transform", r.transform.to_string()},
                      {"guaranteed_lower_bound", r.guaranteed_lower_bound},
                      {"upper_bound", r.upper_bound},
                      {"estimator_called", r.estimator_called}};
  if (r.regions) {
    j["regions"] = {{"ones_lb", r.regions->ones_lb},
                    {"ones_rb", r.regions->ones_rb},
                    {"zeros_la", r.regions->zeros_la},
                    {"zeros_ra", r.regions->zeros_ra}};
  }
  if (r.quantities) {
    const auto& q = *r.quantities;
    j["quantities"] = {{"x", q.x},
                       {"y", q.y},
                       {"z", q.z},
                       {"split", q.split.split_point},
                       {"greedy_length", q.greedy_length},
                       {"split_length", q.split_length},
                       {"unhedged_length", q.unhedged_length}};
  }
  return j;
}

nlohmann::json to_json(const AuditRecord& r, bool timing) {
  nlohmann::json j = {{"instance", to_json(r.instance)}};
  if (r.branch) j["branch"] = to_json(*r.branch);
  j["output_len"] = r.output_len;
  j["oracle_len"] = r.oracle_len;
  j["ratio"] = r.ratio ? nlohmann::json(to_string(*r.ratio)) : nlohmann::json(nullptr);
  j["estimator_id"] = r.estimator_id;
  if (timing && r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  j["violations"] = r.violations;
  if (r.error) j["error"] = *r.error;
  return j;
}

AuditSummary audit(const std::vector<InstanceSpec>& specs, const std::string& estimator_sel,
                   const AuditOptions& options, std::ostream& out) {
  for (const auto& s : specs) {
    if (s.n > oracle::kQuadraticCap) {
      throw oracle::OracleRefusal("audit: n = " + std::to_string(s.n) +
                                  " exceeds the exact-LCS oracle cap of " +
                                  std::to_string(oracle::kQuadraticCap));
    }
  }
  const auto estimator = make_estimator(estimator_sel);
  out << nlohmann::json{{"header",
                         {{"prng", SplitMix64::kName},
                          {"estimator", estimator->id()},
                          {"mode", mode_name(options.mode)},
                          {"instances", specs.size()}}}}
             .dump()
      << '\n';

  AuditSummary summary;
  std::vector<Rational> all;
  std::map<std::string, std::vector<Rational>> per_branch;
  std::map<std::string, std::size_t> histogram;
  std::size_t errors = 0;
  for (const auto& spec : specs) {
    AuditRecord rec;
    rec.instance = spec;
    rec.estimator_id = estimator->id();
    try {
      const StringPair pair = generate(spec);
      const auto start = std::chrono::steady_clock::now();
      const ApproxLcsResult res =
          approx_lcs(pair.a, pair.b, *estimator, engine_options(spec, options.mode));
      rec.wall_time_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      rec.branch = res.report;
      rec.output_len = res.witness.size();
      rec.oracle_len = oracle::lcs_length(pair.a, pair.b);
      if (rec.oracle_len > 0) {
        rec.ratio = Rational(static_cast<std::int64_t>(rec.output_len),
                             static_cast<std::int64_t>(rec.oracle_len));
      }
      rec.violations = check_result(pair.a, pair.b, res, rec.oracle_len);
    } catch (const DispatchExhausted& ex) {
      rec.error = std::string("dispatch exhausted: ") + ex.what();
      ++summary.dispatch_exhausted;
    } catch (const std::exception& ex) {
      rec.error = ex.what();
    }
    ++summary.instances;
    if (rec.error) ++errors;
    if (rec.error || !rec.violations.empty()) ++summary.violating_instances;
    if (rec.branch) {
      const std::string name(branch_name(rec.branch->branch));
      ++histogram[name];
      if (rec.ratio) {
        all.push_back(*rec.ratio);
        per_branch[name].push_back(*rec.ratio);
      }
    }
    out << to_json(rec, options.timing).dump() << '\n';
  }

  nlohmann::json branches = nlohmann::json::object();
  for (auto& [name, ratios] : per_branch) branches[name] = ratio_stats(ratios);
  nlohmann::json s = ratio_stats(all);
  s["instances"] = summary.instances;
  s["violating_instances"] = summary.violating_instances;
  s["errors"] = errors;
  s["dispatch_exhausted"] = summary.dispatch_exhausted;
  s["per_branch"] = branches;
  s["histogram"] = histogram;
  summary.json = s;
  out << nlohmann::json{{"summary", s}}.dump() << '\n';
  return summary;
}

}  // namespace alcs::harness
