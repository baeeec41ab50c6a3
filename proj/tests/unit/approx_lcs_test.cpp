#include "alcs/approx_lcs.hpp"
#include "alcs/errors.hpp"
#include "alcs/exact_lcs.hpp"
#include "alcs/harness/checks.hpp"
#include "alcs/oracle/oracles.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace alcs;
using test_util::bs;

namespace {

ReductionParams params_for(std::size_t n, std::size_t k, Rational c = Rational(1)) {
  return derive_params(n, SymbolCounts{n - k, k, k, n - k}, c);
}

}  // namespace

TEST_CASE("derive_params examples") {
  const ReductionParams p = params_for(100, 10);
  CHECK(p.gamma == Rational(1, 32));
  CHECK(p.delta == Rational(1, 3200));
  CHECK(p.epsilon == Rational(1, 6400));
  CHECK(p.degenerate_threshold == 6400);
  CHECK(p.alpha == 10);
  CHECK(p.beta_n == Rational(10, 3200));
  CHECK(params_for(100, 10, Rational(3)).gamma == Rational(1, 80));
  CHECK(params_for(100, 10, Rational(5)).degenerate_threshold == 25600);
  CHECK_THROWS_AS(derive_params(0, SymbolCounts{}, Rational(1)), ParameterError);
  CHECK_THROWS_AS(derive_params(4, SymbolCounts{1, 1, 2, 2}, Rational(1)), ParameterError);
  CHECK_THROWS_AS(derive_params(4, SymbolCounts{2, 2, 2, 2}, Rational(1, 2)), ParameterError);
}

TEST_CASE("derived parameters satisfy the inequalities the analysis uses") {
  for (std::int64_t c = 1; c <= 8; ++c) {
    const ReductionParams p = params_for(100000, 30000, Rational(c));
    CHECK(p.gamma > Rational(0));
    CHECK(p.gamma < Rational(1, 2));
    CHECK(p.delta * Rational(100) <= p.gamma);
    CHECK(p.epsilon * Rational(6) <= p.gamma);
    for (const Rational& bp : {p.beta_prime_gate, p.beta_prime_right}) {
      // 1 - 2c(β' + γ) ≥ 1/2 + γ with room to spare
      CHECK(Rational(1) - Rational(2) * p.c * (bp + p.gamma) >= Rational(1, 2) + p.gamma + Rational(1, 4));
    }
  }
}

TEST_CASE("approx_lcs examples") {
  const ExactEstimator exact;
  auto r = approx_lcs(bs("00110011"), bs("00110011"), exact, EngineOptions{Mode::paper, 0});
  CHECK(r.witness.size() == 8);
  CHECK(r.report.branch == Branch::balanced_gate);
  r = approx_lcs(bs("00000000"), bs("00001111"), exact);
  CHECK(r.witness.size() == 4);
  CHECK(r.report.branch == Branch::degenerate);
  const BitString a = bs("0000000100000001"), b = bs("1111110111111101");
  r = approx_lcs(a, b, exact);
  CHECK(r.witness.size() >= harness::ratio_floor(r.params->epsilon, oracle::lcs_length(a, b)) + 1);
  CHECK(verify_witness(a, b, r.witness));
  CHECK_THROWS_AS(approx_lcs(bs("01"), bs("0"), exact), ParameterError);
  r = approx_lcs(bs(""), bs(""), exact);
  CHECK(r.witness.empty());
  CHECK_FALSE(r.params.has_value());
}

TEST_CASE("unbalanced gate examples") {
  // 1(A)=10, 0(B)=40 at n = 50
  const ReductionParams p = derive_params(50, SymbolCounts{40, 10, 40, 10}, Rational(1));
  CHECK(unbalanced_gate_fires(SymbolCounts{40, 10, 40, 10}, p));
  const ReductionParams q = params_for(50, 10);
  CHECK_FALSE(unbalanced_gate_fires(SymbolCounts{40, 10, 10, 40}, q));
  // |diff| = ⌊δ·α⌋ never fires; one more does once δ·α ≥ 1
  const ReductionParams big = params_for(40000, 6400);
  CHECK(big.delta * to_rational(big.alpha) == Rational(2));
  CHECK_FALSE(unbalanced_gate_fires(SymbolCounts{33600, 6400, 6402, 33598}, big));
  CHECK(unbalanced_gate_fires(SymbolCounts{33600, 6400, 6403, 33597}, big));
}

TEST_CASE("balanced gate examples") {
  const ReductionParams p = params_for(1000, 500);
  CHECK(balanced_gate_fires(500, p));
  const ReductionParams q = params_for(1000, 250);
  CHECK_FALSE(balanced_gate_fires(750, q));
  // LCS = n - 2: one deletion from each side of a common core
  std::string x;
  for (int i = 0; i < 499; ++i) x += "01";
  std::string y = x;
  x.insert(x.begin() + 100, '1');
  x.insert(x.begin() + 700, '0');
  y.insert(y.begin() + 300, '0');
  y.insert(y.begin() + 900, '1');
  const BitString a = bs(x), b = bs(y);
  const ReductionParams ab = derive_params(1000, SymbolCounts::of(a, b), Rational(1));
  REQUIRE(balanced_gate_fires(a.zeros(), ab));
  const ExactEstimator exact;
  bool called = false;
  const auto w = balanced_gate(a, b, ab, exact, &called);
  REQUIRE(w.has_value());
  CHECK(called);
  CHECK(w->size() >= 998);
  CHECK(verify_witness(a, b, *w));
}

TEST_CASE("dispatch conditions: case 1(a) at the band centre and the case 5 walk") {
  const ReductionParams p = params_for(40000, 8000);
  const CaseThresholds t = CaseThresholds::of(p);
  CHECK(classify_case(RegionCounts{2000, 4000, 6000, 4000}, t) == Case::case1);
  CHECK(classify_case1(4000, 4000, t) == Case1Variant::a);
  CHECK(classify_case1(3000, 4000, t) == Case1Variant::b);
  CHECK(classify_case1(4000, 3000, t) == Case1Variant::c);
  CHECK_FALSE(classify_case1(4100, 4000, t).has_value());
  // (1(R_B), 1(L_B), 0(L_A), 0(R_A)) = (α, 0, α, 0) with α = 8 and β·n < 1
  const ReductionParams s = params_for(40, 8);
  const RegionCounts r{0, 8, 8, 0};
  CHECK(classify_case(r, CaseThresholds::of(s)) == Case::case5);
}

TEST_CASE("dispatch_case rejects a pair that is not normalised") {
  const ExactEstimator exact;
  const BitString a = bs("1111111111110000"), b = bs("0000000000001111");
  const ReductionParams p = derive_params(16, SymbolCounts::of(a, b), Rational(1));
  CHECK_THROWS_AS(dispatch_case(a, b, p, exact), ParameterError);
}

TEST_CASE("case 3 instance meets its composition floor") {
  // A: 0-heavy with its ones in M_A; B: 1-heavy with its zeros split between L_B and R_B.
  const std::size_t k = 40, n = 200;
  std::string a(n, '0'), b(n, '1');
  for (std::size_t i = 0; i < k; ++i) a[k + 20 + i * 2] = '1';
  for (std::size_t i = 0; i < k / 2; ++i) {
    b[i] = '0';
    b[n - 1 - i] = '0';
  }
  const ExactEstimator exact;
  const auto r = approx_lcs(bs(a), bs(b), exact, EngineOptions{Mode::paper, 0});
  CHECK(r.report.branch == Branch::case3);
  const std::int64_t floor = static_cast<std::int64_t>(k) + 2 * floor_int(r.params->beta_n) - 2;
  CHECK(static_cast<std::int64_t>(r.witness.size()) >= floor);
  CHECK(r.witness.size() <= oracle::lcs_length(bs(a), bs(b)));
}

TEST_CASE("exact_lcs agrees with the oracle, row kernels agree with each other") {
  harness::SplitMix64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.below(trial < 200 ? 40 : 700);
    const std::size_t m = rng.below(2) ? n : rng.below(700);
    const Rational p(static_cast<std::int64_t>(rng.below(11)), 10);
    const BitString a = test_util::random_bits(rng, n, p), b = test_util::random_bits(rng, m);
    const SubsequenceWitness w = exact_lcs(a, b);
    REQUIRE(w.size() == oracle::lcs_length(a, b));
    REQUIRE(verify_witness(a, b, w));
    REQUIRE(detail::lcs_row_sparse(a, b) == detail::lcs_row_bitparallel(a, b));
  }
}

TEST_CASE("engine results pass every check, exhaustive to length 7 with the full case machine") {
  const ExactEstimator exact;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::uint64_t i = 0; i < (1ULL << n); ++i) {
      for (std::uint64_t j = 0; j < (1ULL << n); ++j) {
        const BitString a = test_util::nth_string(n, i), b = test_util::nth_string(n, j);
        const std::size_t lcs = oracle::lcs_length(a, b);
        for (Mode mode : {Mode::paper, Mode::ensemble}) {
          const auto r = approx_lcs(a, b, exact, EngineOptions{mode, 0});
          const auto v = harness::check_result(a, b, r, lcs);
          REQUIRE_MESSAGE(v.empty(), a.to_string() << " " << b.to_string() << " " << v.front());
        }
      }
    }
  }
}

TEST_CASE("transform invariance of the output length is not assumed, but validity is") {
  const ExactEstimator exact;
  harness::SplitMix64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(300);
    const Rational p(static_cast<std::int64_t>(rng.below(11)), 10);
    const BitString a = test_util::random_bits(rng, n, p), b = test_util::random_bits(rng, n);
    for (const SymmetryTransform& t : SymmetryTransform::all()) {
      const StringPair q = apply_transform(a, b, t);
      const auto r = approx_lcs(q.a, q.b, exact, EngineOptions{Mode::paper, 0});
      REQUIRE(harness::check_result(q.a, q.b, r, oracle::lcs_length(q.a, q.b)).empty());
    }
  }
}

TEST_CASE("ensemble mode never returns less than paper mode") {
  const ExactEstimator exact;
  harness::SplitMix64 rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(400);
    const Rational p(static_cast<std::int64_t>(rng.below(11)), 10);
    const BitString a = test_util::random_bits(rng, n, p), b = test_util::random_bits(rng, n);
    const auto paper = approx_lcs(a, b, exact, EngineOptions{Mode::paper, 0});
    const auto ens = approx_lcs(a, b, exact, EngineOptions{Mode::ensemble, 0});
    CHECK(ens.witness.size() >= paper.witness.size());
    CHECK(verify_witness(a, b, ens.witness));
  }
}

TEST_CASE("branch names round-trip") {
  for (Branch b : kAllBranches) CHECK(parse_branch(branch_name(b)) == b);
  CHECK_FALSE(parse_branch("case7").has_value());
  CHECK(parse_mode("ensemble") == Mode::ensemble);
}
