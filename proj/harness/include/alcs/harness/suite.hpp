#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcs/harness/generators.hpp"
#include "json.hpp"

namespace alcs::harness {

// A suite is a JSON array (or {"instances": [...]}) of entries
//   {"generator": name, "params": {...}, "n": len | "n_range": [lo, hi],
//    "seed": s, "count": k, "degenerate_threshold": t}
// Each entry expands to `count` specs. Seeds and lengths of the expansion are
// drawn from a SplitMix64 stream seeded with `seed`; exhaustive entries
// instead enumerate the indices seed, seed + 1, ...
std::vector<InstanceSpec> parse_suite(const nlohmann::json& suite,
                                      std::optional<std::uint64_t> seed_override = std::nullopt);
std::vector<InstanceSpec> load_suite(const std::string& path,
                                     std::optional<std::uint64_t> seed_override = std::nullopt);

// APPROXLCS_SEED, when set.
std::optional<std::uint64_t> seed_from_env();

nlohmann::json to_json(const InstanceSpec& spec);

}  // namespace alcs::harness
