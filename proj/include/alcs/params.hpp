#pragma once

#include <algorithm>
#include <cstddef>

#include "alcs/bit_string.hpp"
#include "alcs/rational.hpp"

namespace alcs {

struct SymbolCounts {
  std::size_t zeros_a = 0;
  std::size_t ones_a = 0;
  std::size_t zeros_b = 0;
  std::size_t ones_b = 0;

  static SymbolCounts of(BitStringView a, BitStringView b) noexcept {
    return {a.zeros(), a.ones(), b.zeros(), b.ones()};
  }
  std::size_t minimum() const noexcept { return std::min({zeros_a, ones_a, zeros_b, ones_b}); }
  // min{0(A),0(B)} + min{1(A),1(B)}
  std::size_t fact1_upper() const noexcept {
    return std::min(zeros_a, zeros_b) + std::min(ones_a, ones_b);
  }
};

// Scalar parameters of the reduction. Normalised quantities (beta, gamma,
// delta, epsilon) are fractions of n; beta_n is beta scaled back to counts.
struct ReductionParams {
  std::size_t n = 0;
  std::size_t alpha = 0;  // min of the four symbol counts
  Rational beta;
  Rational beta_n;
  Rational beta_prime_gate;   // 10β, whole-string balance band
  Rational beta_prime_right;  // 4β/α, band handed to the right-hand sub-call of case 1(a)
  Rational gamma;
  Rational delta;
  Rational c;
  Rational epsilon;
  std::size_t degenerate_threshold = 0;
};

// γ = 1/(8(3c+1)), β = γα/100, δ = γ/100, ε = min(δ/2, γ/200),
// degenerate_threshold = ceil(200/γ). Throws ParameterError on n = 0,
// counts that do not sum to n, or c < 1.
ReductionParams derive_params(std::size_t n, const SymbolCounts& counts, const Rational& c);

}  // namespace alcs
