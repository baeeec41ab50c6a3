#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "alcs/approx_lcs.hpp"
#include "alcs/rational.hpp"
#include "alcs/symmetry.hpp"

namespace alcs::harness {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GeneratorKind { uniform, perfectly_unbalanced, planted_lcs, case_targeted, exhaustive };

std::string_view generator_name(GeneratorKind g) noexcept;
std::optional<GeneratorKind> parse_generator(std::string_view name) noexcept;

struct InstanceSpec {
  GeneratorKind generator = GeneratorKind::uniform;
  Rational p_a{1, 2};
  Rational p_b{1, 2};
  Rational alpha{1, 10};
  Rational rho{3, 4};
  Branch branch = Branch::case3;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  // Engine cut-off for the exact path; also shapes case_targeted instances.
  std::optional<std::size_t> degenerate_threshold;
};

// Deterministic pair for the spec.
//   uniform            bits of a are 1 with probability p_a, of b with p_b
//   perfectly_unbalanced  1(A) = ⌊αn⌋, 0(B) = ⌊αn⌋ + r with r ≤ ⌊δ⌊αn⌋⌋
//   planted_lcs        a common string of length ⌊ρn⌋ padded independently
//   exhaustive         a = low n bits of seed, b = the next n bits
//   case_targeted      resampled until the engine (exact estimator, paper
//                      mode) reports the requested branch
// Throws GenerationError when the spec cannot be satisfied.
StringPair generate(const InstanceSpec& spec);

inline constexpr int kResampleCap = 64;

// Range of α counts the case_targeted generator uses at length n.
struct TargetedRange {
  std::size_t k_min = 0;
  std::size_t k_max = 0;
};
std::optional<TargetedRange> targeted_alpha_range(std::size_t n,
                                                  std::optional<std::size_t> degenerate_threshold);

EngineOptions engine_options(const InstanceSpec& spec, Mode mode);

}  // namespace alcs::harness
