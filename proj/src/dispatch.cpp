#include <algorithm>
#include <string>

#include "alcs/approx_lcs.hpp"
#include "alcs/errors.hpp"

namespace alcs {

namespace {

bool at_most(std::size_t x, const CaseThresholds& t, std::int64_t m) {
  return to_rational(x) <= t.at(m);
}
bool above(std::size_t x, const CaseThresholds& t, std::int64_t m) {
  return to_rational(x) > t.at(m);
}
bool below(std::size_t x, const CaseThresholds& t, std::int64_t m) {
  return to_rational(x) < t.at(m);
}

bool holds(Case c, const RegionCounts& r, const CaseThresholds& t) {
  switch (c) {
    case Case::case1:
      return at_most(r.ones_rb, t, 2) && at_most(r.zeros_ra, t, 2);
    case Case::case2:
      return at_most(r.ones_lb, t, 2) && at_most(r.zeros_la, t, 2);
    case Case::case3:
      return at_most(r.ones_rb, t, 1) && at_most(r.ones_lb, t, 1) && above(r.zeros_la, t, 2) &&
             above(r.zeros_ra, t, 2);
    case Case::case4:
      return above(r.ones_rb, t, 2) && above(r.ones_lb, t, 2) && at_most(r.zeros_la, t, 1) &&
             at_most(r.zeros_ra, t, 1);
    case Case::case5:
      return above(r.ones_rb, t, 1) && above(r.zeros_la, t, 1);
    case Case::case6:
      return above(r.ones_lb, t, 1) && above(r.zeros_ra, t, 1);
  }
  return false;
}

constexpr std::array<Case, 6> kCaseOrder = {Case::case1, Case::case2, Case::case3,
                                            Case::case4, Case::case5, Case::case6};

struct Candidate {
  SubsequenceWitness witness;
  Branch branch = Branch::degenerate;
  std::size_t lower = 0;
  std::optional<Case1aQuantities> quantities;
  bool estimator_called = false;
  bool reversed = false;
};

void append_match(SubsequenceWitness& w, BitStringView a, Range ra, BitStringView b, Range rb,
                  Symbol s) {
  const BitStringView va = a.subview(ra), vb = b.subview(rb);
  const std::size_t k = match_length(va, vb, s);
  va.first_occurrences(s, k, ra.begin, w.a_indices);
  vb.first_occurrences(s, k, rb.begin, w.b_indices);
}

std::size_t composition_floor(const ReductionParams& p) {
  const std::int64_t v =
      static_cast<std::int64_t>(p.alpha) + 2 * floor_int(p.beta_n) - 2;
  return v < 0 ? 0 : static_cast<std::size_t>(v);
}

// Case 1 on (a, b); case 2 calls this on the reversed pair.
Candidate run_case1(BitStringView a, BitStringView b, const ReductionParams& p,
                    const CaseThresholds& t, const EditEstimator& estimator, Case1Variant variant) {
  const std::size_t n = a.size();
  const std::size_t k = p.alpha;
  Candidate out;
  if (variant != Case1Variant::a) {
    out.witness = match(a, b, Symbol::zero);
    out.branch = variant == Case1Variant::b ? Branch::case1b : Branch::case1c;
    out.lower = out.witness.size();
    return out;
  }

  const Range lm{0, n - k};
  const Range right{n - k, n};
  const BitStringView a_lm = a.subview(lm);
  const BitStringView a_r = a.subview(right);
  GreedyResult g = greedy(a_lm, a_r, b);

  const std::size_t s = g.split.split_point;
  const std::size_t ones_lm = a_lm.ones();
  const std::size_t zeros_lm = a_lm.size() - ones_lm;
  const std::size_t ones_a_r = a_r.ones();
  const std::size_t zeros_a_r = a_r.size() - ones_a_r;
  const std::size_t ones_bl = b.rank1(s);
  const std::size_t zeros_bl = s - ones_bl;
  const std::size_t ones_br = b.ones() - ones_bl;
  const std::size_t zeros_br = (n - s) - ones_br;

  Case1aQuantities q;
  q.split = g.split;
  const std::size_t left1 = std::min(ones_lm, ones_bl);
  const std::size_t left0 = std::min(zeros_lm, zeros_bl);
  q.x = left0 + left1;
  q.z = std::max(left0, left1);
  q.y = std::min(ones_a_r, ones_br) + std::min(zeros_a_r, zeros_br);

  // BestMatch on the left-middle pieces, then the better of BestMatch and the
  // estimator's certified alignment on the right pieces.
  SubsequenceWitness composed = best_match(a_lm, b.subview(lm));
  const BitStringView b_r = b.subview(right);
  SubsequenceWitness right_part = best_match(a_r, b_r);
  const EditEstimate est = approx_ed_value(a_r, b_r, estimator);
  out.estimator_called = true;
  const std::size_t certified = est.certified_length(k);
  if (est.witness && certified > right_part.size()) {
    right_part = *est.witness;
    right_part.truncate(certified);
  }
  composed.append(right_part, n - k, n - k);

  q.greedy_length = g.witness.size();
  q.split_length = composed.size();
  const bool use_split = at_most(q.z, t, 10);
  q.unhedged_length = use_split ? q.split_length : q.greedy_length;

  out.branch = use_split ? Branch::case1a_split : Branch::case1a_greedy;
  out.lower = q.z + (q.y + 1) / 2;
  // Keep the longer of the two certified candidates; ties follow the Z test.
  if (use_split) {
    out.witness = composed.size() >= g.witness.size() ? std::move(composed) : std::move(g.witness);
  } else {
    out.witness = g.witness.size() >= composed.size() ? std::move(g.witness) : std::move(composed);
  }
  out.quantities = q;
  return out;
}

Branch to_case2(Branch b) {
  switch (b) {
    case Branch::case1a_greedy:
      return Branch::case2a_greedy;
    case Branch::case1a_split:
      return Branch::case2a_split;
    case Branch::case1b:
      return Branch::case2b;
    case Branch::case1c:
      return Branch::case2c;
    default:
      return b;
  }
}

Candidate run_case(Case c, BitStringView a, BitStringView b, const ReductionParams& p,
                   const CaseThresholds& t, const RegionCounts& r, const EditEstimator& estimator) {
  const std::size_t n = a.size();
  const std::size_t k = p.alpha;
  const TripartiteSplit sp = TripartiteSplit::of(n, k);
  Candidate out;
  if (c == Case::case1) {
    auto variant = classify_case1(r.ones_rb, r.zeros_ra, t);
    return run_case1(a, b, p, t, estimator, *variant);
  }
  if (c == Case::case2) {
    // The mirror image of case 1: reverse both strings, which exchanges the
    // roles of L and R, and map the witness back afterwards.
    const BitString ra = BitString::from_view(a).reversed();
    const BitString rb = BitString::from_view(b).reversed();
    auto variant = classify_case1(r.ones_lb, r.zeros_la, t);
    out = run_case1(ra, rb, p, t, estimator, *variant);
    out.witness = pull_back_witness(std::move(out.witness), SymmetryTransform{false, false, true},
                                    n, n);
    out.branch = to_case2(out.branch);
    out.reversed = true;
    return out;
  }
  out.witness.reserve(n);
  switch (c) {
    case Case::case1:
    case Case::case2:
      break;
    case Case::case3:
      append_match(out.witness, a, sp.left, b, sp.left, Symbol::zero);
      append_match(out.witness, a, sp.middle, b, sp.middle, Symbol::one);
      append_match(out.witness, a, sp.right, b, sp.right, Symbol::zero);
      out.branch = Branch::case3;
      break;
    case Case::case4:
      append_match(out.witness, a, sp.left, b, sp.left, Symbol::one);
      append_match(out.witness, a, sp.middle, b, sp.middle, Symbol::zero);
      append_match(out.witness, a, sp.right, b, sp.right, Symbol::one);
      out.branch = Branch::case4;
      break;
    case Case::case5:
      append_match(out.witness, a, sp.left, b, {0, n - k}, Symbol::zero);
      append_match(out.witness, a, {k, n}, b, sp.right, Symbol::one);
      out.branch = Branch::case5;
      break;
    case Case::case6:
      append_match(out.witness, a, {0, n - k}, b, sp.left, Symbol::one);
      append_match(out.witness, a, sp.right, b, {k, n}, Symbol::zero);
      out.branch = Branch::case6;
      break;
  }
  out.lower = composition_floor(p);
  return out;
}

}  // namespace

DispatchExhausted::DispatchExhausted(const RegionCounts& r)
    : std::logic_error("no case matched region counts 1(L_B)=" + std::to_string(r.ones_lb) +
                       " 1(R_B)=" + std::to_string(r.ones_rb) +
                       " 0(L_A)=" + std::to_string(r.zeros_la) +
                       " 0(R_A)=" + std::to_string(r.zeros_ra)),
      counts(r) {}

std::optional<Case> classify_case(const RegionCounts& r, const CaseThresholds& t) {
  for (Case c : kCaseOrder) {
    if (holds(c, r, t)) return c;
  }
  return std::nullopt;
}

std::vector<Case> matching_cases(const RegionCounts& r, const CaseThresholds& t) {
  std::vector<Case> out;
  for (Case c : kCaseOrder) {
    if (holds(c, r, t)) out.push_back(c);
  }
  return out;
}

std::optional<Case1Variant> classify_case1(std::size_t ones_rb, std::size_t zeros_ra,
                                           const CaseThresholds& t) {
  if (!(at_most(ones_rb, t, 2) && at_most(zeros_ra, t, 2))) return std::nullopt;
  const bool rb_centered = !below(ones_rb, t, -4) && at_most(ones_rb, t, 4);
  const bool ra_centered = !below(zeros_ra, t, -4) && at_most(zeros_ra, t, 4);
  if (rb_centered && ra_centered) return Case1Variant::a;
  if (below(ones_rb, t, -4)) return Case1Variant::b;
  if (below(zeros_ra, t, -4)) return Case1Variant::c;
  throw std::logic_error("case 1 sub-cases do not cover the band");
}

RegionCounts region_counts(BitStringView a, BitStringView b, const TripartiteSplit& split) {
  return {b.count(split.left, Symbol::one), b.count(split.right, Symbol::one),
          a.count(split.left, Symbol::zero), a.count(split.right, Symbol::zero)};
}

DispatchResult dispatch_case(BitStringView a, BitStringView b, const ReductionParams& params,
                             const EditEstimator& estimator, Mode mode) {
  const std::size_t n = a.size();
  if (b.size() != n || params.n != n) throw ParameterError("dispatch_case: length mismatch");
  const SymbolCounts counts = SymbolCounts::of(a, b);
  if (counts.ones_a != params.alpha || counts.minimum() != params.alpha || params.alpha == 0) {
    throw ParameterError("dispatch_case: pair is not normalised so that 1(A) = alpha > 0");
  }
  const CaseThresholds t = CaseThresholds::of(params);
  const RegionCounts r = region_counts(a, b, TripartiteSplit::of(n, params.alpha));
  const auto first = classify_case(r, t);
  if (!first) throw DispatchExhausted(r);

  Candidate chosen = run_case(*first, a, b, params, t, r, estimator);
  bool estimator_called = chosen.estimator_called;
  if (mode == Mode::ensemble) {
    for (Case c : matching_cases(r, t)) {
      if (c == *first) continue;
      Candidate other = run_case(c, a, b, params, t, r, estimator);
      estimator_called = estimator_called || other.estimator_called;
      if (other.witness.size() > chosen.witness.size()) chosen = std::move(other);
    }
    SubsequenceWitness bm = best_match(a, b);
    if (bm.size() > chosen.witness.size()) {
      Candidate c;
      c.witness = std::move(bm);
      c.branch = Branch::best_match;
      c.lower = (counts.fact1_upper() + 1) / 2;
      chosen = std::move(c);
    }
  }

  DispatchResult out;
  out.report.branch = chosen.branch;
  out.report.transform.reverse = chosen.reversed;
  out.report.quantities = chosen.quantities;
  out.report.regions = r;
  out.report.guaranteed_lower_bound = chosen.lower;
  out.report.upper_bound = counts.fact1_upper();
  out.report.estimator_called = estimator_called;
  out.witness = std::move(chosen.witness);
  return out;
}

}  // namespace alcs
