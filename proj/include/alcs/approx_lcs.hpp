#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alcs/bit_string.hpp"
#include "alcs/edit_distance.hpp"
#include "alcs/params.hpp"
#include "alcs/subroutines.hpp"
#include "alcs/symmetry.hpp"
#include "alcs/witness.hpp"

namespace alcs {

enum class Mode { paper, ensemble };

enum class Branch {
  degenerate,
  unbalanced_gate,
  balanced_gate,
  case1a_greedy,
  case1a_split,
  case1b,
  case1c,
  case2a_greedy,
  case2a_split,
  case2b,
  case2c,
  case3,
  case4,
  case5,
  case6,
  best_match,  // ensemble mode only: the plain BestMatch candidate won
};

inline constexpr std::array<Branch, 16> kAllBranches = {
    Branch::degenerate,    Branch::unbalanced_gate, Branch::balanced_gate, Branch::case1a_greedy,
    Branch::case1a_split,  Branch::case1b,          Branch::case1c,        Branch::case2a_greedy,
    Branch::case2a_split,  Branch::case2b,          Branch::case2c,        Branch::case3,
    Branch::case4,         Branch::case5,           Branch::case6,         Branch::best_match};

std::string_view branch_name(Branch b) noexcept;
std::optional<Branch> parse_branch(std::string_view name) noexcept;
std::string_view mode_name(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view name) noexcept;

// The six top-level cases of the dispatch, in evaluation order.
enum class Case { case1, case2, case3, case4, case5, case6 };
enum class Case1Variant { a, b, c };

// Region counts the dispatch conditions read: 1(L_B), 1(R_B), 0(L_A), 0(R_A).
struct RegionCounts {
  std::size_t ones_lb = 0;
  std::size_t ones_rb = 0;
  std::size_t zeros_la = 0;
  std::size_t zeros_ra = 0;
};

// α/2 and β scaled to counts, the only two quantities the conditions use.
struct CaseThresholds {
  Rational half_alpha;
  Rational beta_n;

  static CaseThresholds of(const ReductionParams& p) {
    return {to_rational(p.alpha) / Rational(2), p.beta_n};
  }
  // Returns half_alpha + multiple·beta_n.
  Rational at(std::int64_t multiple) const { return half_alpha + Rational(multiple) * beta_n; }
};

// First case whose condition holds, in evaluation order.
std::optional<Case> classify_case(const RegionCounts& r, const CaseThresholds& t);
// Every case whose condition holds.
std::vector<Case> matching_cases(const RegionCounts& r, const CaseThresholds& t);
// Sub-case of case 1 from 1(R_B) and 0(R_A); nullopt only if case 1 itself fails.
std::optional<Case1Variant> classify_case1(std::size_t ones_rb, std::size_t zeros_ra,
                                           const CaseThresholds& t);

// L = [0, α), M = [α, n - α), R = [n - α, n).
struct TripartiteSplit {
  Range left;
  Range middle;
  Range right;

  static TripartiteSplit of(std::size_t n, std::size_t alpha) noexcept {
    return {{0, alpha}, {alpha, n - alpha}, {n - alpha, n}};
  }
};

RegionCounts region_counts(BitStringView a, BitStringView b, const TripartiteSplit& split);

// Quantities of case 1(a), computed from the cut greedy picked.
struct Case1aQuantities {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
  GreedySplit split;
  std::size_t greedy_length = 0;
  std::size_t split_length = 0;     // BestMatch(L∪M) + max{BestMatch, ApproxED} on R
  std::size_t unhedged_length = 0;  // whichever of the two the Z test alone selects
};

struct BranchReport {
  Branch branch = Branch::degenerate;
  SymmetryTransform transform;  // normalisation, plus reverse for case 2
  std::optional<Case1aQuantities> quantities;
  std::optional<RegionCounts> regions;  // normalised frame, when the dispatch ran
  std::size_t guaranteed_lower_bound = 0;
  std::size_t upper_bound = 0;  // min{0(A),0(B)} + min{1(A),1(B)}
  bool estimator_called = false;
};

struct ApproxLcsResult {
  SubsequenceWitness witness;
  BranchReport report;
  std::optional<ReductionParams> params;  // absent only for n = 0
};

struct EngineOptions {
  Mode mode = Mode::paper;
  // Replaces ceil(200/γ) as the α·n cut-off of the exact path.
  std::optional<std::size_t> degenerate_threshold;
};

// The four region counts that matched no case.
class DispatchExhausted : public std::logic_error {
 public:
  explicit DispatchExhausted(const RegionCounts& r);
  RegionCounts counts;
};

// (1/2 + ε)-approximate LCS of two equal-length binary strings. Throws
// ParameterError on unequal lengths; n = 0 yields an empty witness.
ApproxLcsResult approx_lcs(BitStringView a, BitStringView b, const EditEstimator& estimator,
                           Mode mode = Mode::paper);
ApproxLcsResult approx_lcs(BitStringView a, BitStringView b, const EditEstimator& estimator,
                           const EngineOptions& options);

// BestMatch(a, b) when |1(A) - 0(B)| > δ·α·n, else nullopt.
std::optional<SubsequenceWitness> unbalanced_gate(BitStringView a, BitStringView b,
                                                  const ReductionParams& params);
bool unbalanced_gate_fires(const SymbolCounts& counts, const ReductionParams& params);

// The longer of BestMatch(a, b) and the estimator's certified witness when
// |2·0(a) - n| <= 2·10β·n, else nullopt. `estimator_called` is set when the
// estimator ran.
std::optional<SubsequenceWitness> balanced_gate(BitStringView a, BitStringView b,
                                                const ReductionParams& params,
                                                const EditEstimator& estimator,
                                                bool* estimator_called = nullptr);
bool balanced_gate_fires(std::size_t zeros_a, const ReductionParams& params);

struct DispatchResult {
  SubsequenceWitness witness;
  BranchReport report;
};

// The six-case dispatch on a normalised pair: 1(a) must equal α and both
// gates must have passed. Throws ParameterError if a is not normalised.
DispatchResult dispatch_case(BitStringView a, BitStringView b, const ReductionParams& params,
                             const EditEstimator& estimator, Mode mode = Mode::paper);

// The transform that makes 1(A) the minimum symbol count.
SymmetryTransform normalizing_transform(const SymbolCounts& counts) noexcept;

}  // namespace alcs
