#include "alcs/approx_lcs.hpp"

#include <cstdlib>

#include "alcs/errors.hpp"
#include "alcs/exact_lcs.hpp"

namespace alcs {

namespace {

constexpr std::array<std::string_view, 16> kBranchNames = {
    "degenerate",    "unbalanced_gate", "balanced_gate", "case1a_greedy",
    "case1a_split",  "case1b",          "case1c",        "case2a_greedy",
    "case2a_split",  "case2b",          "case2c",        "case3",
    "case4",         "case5",           "case6",         "best_match"};

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

}  // namespace

std::string_view branch_name(Branch b) noexcept { return kBranchNames[static_cast<std::size_t>(b)]; }

std::optional<Branch> parse_branch(std::string_view name) noexcept {
  for (Branch b : kAllBranches) {
    if (branch_name(b) == name) return b;
  }
  return std::nullopt;
}

std::string_view mode_name(Mode m) noexcept { return m == Mode::paper ? "paper" : "ensemble"; }

std::optional<Mode> parse_mode(std::string_view name) noexcept {
  if (name == "paper") return Mode::paper;
  if (name == "ensemble") return Mode::ensemble;
  return std::nullopt;
}

SymmetryTransform normalizing_transform(const SymbolCounts& counts) noexcept {
  const std::size_t m = counts.minimum();
  if (counts.ones_a == m) return {};
  if (counts.ones_b == m) return {true, false, false};
  if (counts.zeros_a == m) return {false, true, false};
  return {true, true, false};
}

bool unbalanced_gate_fires(const SymbolCounts& counts, const ReductionParams& params) {
  const std::size_t d = counts.ones_a > counts.zeros_b ? counts.ones_a - counts.zeros_b
                                                       : counts.zeros_b - counts.ones_a;
  return to_rational(d) > params.delta * to_rational(params.alpha);
}

std::optional<SubsequenceWitness> unbalanced_gate(BitStringView a, BitStringView b,
                                                  const ReductionParams& params) {
  if (!unbalanced_gate_fires(SymbolCounts::of(a, b), params)) return std::nullopt;
  return best_match(a, b);
}

bool balanced_gate_fires(std::size_t zeros_a, const ReductionParams& params) {
  const std::int64_t d = 2 * static_cast<std::int64_t>(zeros_a) - static_cast<std::int64_t>(params.n);
  return to_rational(static_cast<std::size_t>(std::llabs(d))) <= Rational(20) * params.beta_n;
}

std::optional<SubsequenceWitness> balanced_gate(BitStringView a, BitStringView b,
                                                const ReductionParams& params,
                                                const EditEstimator& estimator,
                                                bool* estimator_called) {
  if (!balanced_gate_fires(a.zeros(), params)) return std::nullopt;
  SubsequenceWitness bm = best_match(a, b);
  const EditEstimate est = approx_ed_value(a, b, estimator);
  if (estimator_called) *estimator_called = true;
  const std::size_t certified = est.certified_length(a.size());
  if (est.witness && certified > bm.size()) {
    SubsequenceWitness w = *est.witness;
    w.truncate(certified);
    return w;
  }
  return bm;
}

ApproxLcsResult approx_lcs(BitStringView a, BitStringView b, const EditEstimator& estimator,
                           Mode mode) {
  EngineOptions options;
  options.mode = mode;
  return approx_lcs(a, b, estimator, options);
}

ApproxLcsResult approx_lcs(BitStringView a, BitStringView b, const EditEstimator& estimator,
                           const EngineOptions& options) {
  if (a.size() != b.size()) {
    throw ParameterError("approx_lcs: strings have lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  ApproxLcsResult out;
  const std::size_t n = a.size();
  if (n == 0) return out;

  const SymbolCounts counts = SymbolCounts::of(a, b);
  const ReductionParams params = derive_params(n, counts, estimator.factor());
  out.params = params;
  const std::size_t upper = counts.fact1_upper();
  out.report.upper_bound = upper;

  const SymmetryTransform t = normalizing_transform(counts);
  StringPair owned;
  BitStringView na = a;
  BitStringView nb = b;
  if (!t.is_identity()) {
    owned = apply_transform(a, b, t);
    na = owned.a;
    nb = owned.b;
  }

  const std::size_t threshold = options.degenerate_threshold.value_or(params.degenerate_threshold);
  if (params.alpha == 0 || params.alpha <= threshold) {
    out.witness = pull_back_witness(exact_lcs(na, nb), t, n, n);
    out.report.branch = Branch::degenerate;
    out.report.transform = t;
    out.report.guaranteed_lower_bound = out.witness.size();
    return out;
  }

  if (auto w = unbalanced_gate(a, b, params)) {
    out.witness = std::move(*w);
    out.report.branch = Branch::unbalanced_gate;
    // BestMatch >= (1+δ)/(2+δ) of the upper bound once the gate fires.
    const Rational one(1);
    out.report.guaranteed_lower_bound = static_cast<std::size_t>(
        ceil_int((one + params.delta) * to_rational(upper) / (Rational(2) + params.delta)));
    return out;
  }

  bool called = false;
  if (auto w = balanced_gate(na, nb, params, estimator, &called)) {
    out.witness = pull_back_witness(std::move(*w), t, n, n);
    out.report.branch = Branch::balanced_gate;
    out.report.transform = t;
    out.report.guaranteed_lower_bound = ceil_half(upper);
    out.report.estimator_called = called;
    return out;
  }

  DispatchResult d = dispatch_case(na, nb, params, estimator, options.mode);
  out.witness = pull_back_witness(std::move(d.witness), t, n, n);
  const bool reversed = d.report.transform.reverse;
  out.report = d.report;
  out.report.transform = t;
  out.report.transform.reverse = reversed;
  return out;
}

}  // namespace alcs
