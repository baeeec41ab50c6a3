#pragma once

#include <string>
#include <vector>

#include "alcs/approx_lcs.hpp"

namespace alcs::harness {

// ⌈(1/2 + f)·lcs⌉ - 1, clamped at zero.
std::size_t ratio_floor(const Rational& f, std::size_t lcs);

// Every invariant an engine result must satisfy against the exact LCS
// length; returns one message per violation.
//   witness passes verify_witness; |w| ≤ Fact-1 bound and ≤ lcs
//   |w| ≥ the reported guaranteed lower bound
//   |w| ≥ ⌈(1/2+ε)lcs⌉ - 1 and ≥ ⌈lcs/2⌉ - 1
//   branch floors: unbalanced gate (1/2+δ/2), balanced gate (1/2+γ),
//   cases 3-6 α·n + 2⌊β·n⌋ - 2, cases 1(b)/(c) min(0(A),0(B)) exactly
std::vector<std::string> check_result(BitStringView a, BitStringView b, const ApproxLcsResult& r,
                                      std::size_t lcs);

}  // namespace alcs::harness
