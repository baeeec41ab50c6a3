#include "alcs/harness/suite.hpp"

#include <cstdlib>
#include <fstream>

#include "alcs/errors.hpp"
#include "alcs/harness/prng.hpp"

namespace alcs::harness {

namespace {

Rational rational_param(const nlohmann::json& params, const char* key, const Rational& fallback) {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number()) return parse_rational(v.dump());
  throw ParseError(std::string("suite: parameter ") + key + " must be a number or string");
}

InstanceSpec entry_template(const nlohmann::json& e) {
  InstanceSpec s;
  const auto name = e.at("generator").get<std::string>();
  const auto g = parse_generator(name);
  if (!g) throw ParseError("suite: unknown generator '" + name + "'");
  s.generator = *g;
  const nlohmann::json params = e.value("params", nlohmann::json::object());
  s.p_a = rational_param(params, "p_a", s.p_a);
  s.p_b = rational_param(params, "p_b", s.p_b);
  s.alpha = rational_param(params, "alpha", s.alpha);
  s.rho = rational_param(params, "rho", s.rho);
  if (params.contains("branch")) {
    const auto b = parse_branch(params.at("branch").get<std::string>());
    if (!b) throw ParseError("suite: unknown branch '" + params.at("branch").get<std::string>() + "'");
    s.branch = *b;
  }
  if (e.contains("degenerate_threshold")) {
    s.degenerate_threshold = e.at("degenerate_threshold").get<std::size_t>();
  }
  return s;
}

}  // namespace

std::vector<InstanceSpec> parse_suite(const nlohmann::json& suite,
                                      std::optional<std::uint64_t> seed_override) {
  const nlohmann::json& entries = suite.is_object() ? suite.at("instances") : suite;
  if (!entries.is_array()) throw ParseError("suite: expected an array of entries");
  std::vector<InstanceSpec> out;
  for (const auto& e : entries) {
    const InstanceSpec base = entry_template(e);
    const std::size_t count = e.value("count", std::size_t{1});
    std::uint64_t seed = e.value("seed", std::uint64_t{0});
    std::size_t lo = 0, hi = 0;
    if (e.contains("n_range")) {
      lo = e.at("n_range").at(0).get<std::size_t>();
      hi = e.at("n_range").at(1).get<std::size_t>();
      if (lo > hi) throw ParseError("suite: n_range is empty");
    } else {
      lo = hi = e.at("n").get<std::size_t>();
    }
    if (base.generator == GeneratorKind::exhaustive) {
      if (lo != hi) throw ParseError("suite: exhaustive entries take a single n");
      for (std::size_t i = 0; i < count; ++i) {
        InstanceSpec s = base;
        s.n = lo;
        s.seed = seed + i;
        out.push_back(s);
      }
      continue;
    }
    if (seed_override) seed = *seed_override;
    SplitMix64 stream(seed);
    for (std::size_t i = 0; i < count; ++i) {
      InstanceSpec s = base;
      s.seed = stream.next();
      s.n = static_cast<std::size_t>(stream.between(lo, hi));
      out.push_back(s);
    }
  }
  return out;
}

std::vector<InstanceSpec> load_suite(const std::string& path,
                                     std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("suite: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("suite: " + path + ": " + ex.what());
  }
  return parse_suite(j, seed_override);
}

std::optional<std::uint64_t> seed_from_env() {
  const char* v = std::getenv("APPROXLCS_SEED");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long s = std::strtoull(v, &end, 0);
  if (*end != '\0') throw ParseError(std::string("APPROXLCS_SEED is not an integer: ") + v);
  return static_cast<std::uint64_t>(s);
}

nlohmann::json to_json(const InstanceSpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  switch (spec.generator) {
    case GeneratorKind::uniform:
      params["p_a"] = to_string(spec.p_a);
      params["p_b"] = to_string(spec.p_b);
      break;
    case GeneratorKind::perfectly_unbalanced:
      params["alpha"] = to_string(spec.alpha);
      break;
    case GeneratorKind::planted_lcs:
      params["rho"] = to_string(spec.rho);
      break;
    case GeneratorKind::case_targeted:
      params["branch"] = branch_name(spec.branch);
      break;
    case GeneratorKind::exhaustive:
      break;
  }
  nlohmann::json j = {{"generator", generator_name(spec.generator)},
                      {"params", params},
                      {"n", spec.n},
                      {"seed", spec.seed}};
  if (spec.degenerate_threshold) j["degenerate_threshold"] = *spec.degenerate_threshold;
  return j;
}

}  // namespace alcs::harness
