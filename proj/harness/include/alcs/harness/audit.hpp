#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alcs/harness/generators.hpp"
#include "json.hpp"

namespace alcs::harness {

struct AuditOptions {
  Mode mode = Mode::paper;
  bool timing = false;  // adds wall_time_ms, which breaks byte-identical reruns
};

struct AuditRecord {
  InstanceSpec instance;
  std::optional<BranchReport> branch;
  std::size_t output_len = 0;
  std::size_t oracle_len = 0;
  std::optional<Rational> ratio;  // absent when oracle_len = 0
  std::string estimator_id;
  std::optional<double> wall_time_ms;
  std::vector<std::string> violations;
  std::optional<std::string> error;  // generation or dispatch failure
};

struct AuditSummary {
  std::size_t instances = 0;
  std::size_t violating_instances = 0;
  std::size_t dispatch_exhausted = 0;
  nlohmann::json json;

  bool ok() const noexcept { return violating_instances == 0; }
};

nlohmann::json to_json(const BranchReport& r);
nlohmann::json to_json(const AuditRecord& r, bool timing);

// Writes a header line, one JSON line per spec in spec order, and a trailing
// summary line. Throws OracleRefusal before any output when some n exceeds
// the quadratic oracle's cap.
AuditSummary audit(const std::vector<InstanceSpec>& specs, const std::string& estimator,
                   const AuditOptions& options, std::ostream& out);

}  // namespace alcs::harness
