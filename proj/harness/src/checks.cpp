#include "alcs/harness/checks.hpp"

#include <algorithm>

namespace alcs::harness {

namespace {

std::string below_floor(std::string_view what, std::size_t got, std::size_t floor) {
  return std::string(what) + ": output " + std::to_string(got) + " < " + std::to_string(floor);
}

}  // namespace

std::size_t ratio_floor(const Rational& f, std::size_t lcs) {
  const std::int64_t v = ceil_int((Rational(1, 2) + f) * to_rational(lcs)) - 1;
  return v < 0 ? 0 : static_cast<std::size_t>(v);
}

std::vector<std::string> check_result(BitStringView a, BitStringView b, const ApproxLcsResult& r,
                                      std::size_t lcs) {
  std::vector<std::string> out;
  const std::size_t got = r.witness.size();
  if (!verify_witness(a, b, r.witness)) out.emplace_back("witness fails verification");
  const std::size_t fact1 = std::min(a.zeros(), b.zeros()) + std::min(a.ones(), b.ones());
  if (got > fact1) out.push_back("output " + std::to_string(got) + " exceeds Fact-1 bound");
  if (got > lcs) out.push_back("output " + std::to_string(got) + " exceeds exact LCS");
  if (r.report.upper_bound != fact1) out.emplace_back("reported upper bound differs from Fact 1");
  if (got < r.report.guaranteed_lower_bound) {
    out.push_back(below_floor("guaranteed lower bound", got, r.report.guaranteed_lower_bound));
  }
  if (lcs > 0 && got < ratio_floor(Rational(0), lcs)) {
    out.push_back(below_floor("half floor", got, ratio_floor(Rational(0), lcs)));
  }
  if (!r.params) return out;
  const ReductionParams& p = *r.params;
  if (got < ratio_floor(p.epsilon, lcs)) {
    out.push_back(below_floor("epsilon floor", got, ratio_floor(p.epsilon, lcs)));
  }
  switch (r.report.branch) {
    case Branch::unbalanced_gate:
      if (got < ratio_floor(p.delta / Rational(2), lcs)) {
        out.push_back(below_floor("unbalanced gate floor", got, ratio_floor(p.delta / Rational(2), lcs)));
      }
      break;
    case Branch::balanced_gate:
      if (got < ratio_floor(p.gamma, lcs)) {
        out.push_back(below_floor("balanced gate floor", got, ratio_floor(p.gamma, lcs)));
      }
      break;
    case Branch::case3:
    case Branch::case4:
    case Branch::case5:
    case Branch::case6: {
      const std::int64_t f = static_cast<std::int64_t>(p.alpha) + 2 * floor_int(p.beta_n) - 2;
      if (static_cast<std::int64_t>(got) < f) {
        out.push_back(below_floor("composition floor", got, static_cast<std::size_t>(f)));
      }
      break;
    }
    case Branch::case1b:
    case Branch::case1c:
    case Branch::case2b:
    case Branch::case2c: {
      // Match(A, B, 0) in the normalised frame, where 0 may be a complemented 1.
      const std::size_t want = r.report.transform.complement ? std::min(a.ones(), b.ones())
                                                             : std::min(a.zeros(), b.zeros());
      if (got != want) {
        out.push_back("case 1(b)/(c) output " + std::to_string(got) + " != " + std::to_string(want));
      }
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace alcs::harness
