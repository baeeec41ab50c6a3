#include "alcs/params.hpp"

#include <string>

#include "alcs/errors.hpp"

namespace alcs {

ReductionParams derive_params(std::size_t n, const SymbolCounts& counts, const Rational& c) {
  if (n == 0) throw ParameterError("derive_params: n must be positive");
  if (counts.zeros_a + counts.ones_a != n || counts.zeros_b + counts.ones_b != n) {
    throw ParameterError("derive_params: symbol counts do not sum to n = " + std::to_string(n));
  }
  if (c < Rational(1)) throw ParameterError("derive_params: c must be >= 1");

  ReductionParams p;
  p.n = n;
  p.alpha = counts.minimum();
  p.c = c;
  p.gamma = Rational(1) / (Rational(8) * (Rational(3) * c + Rational(1)));
  const Rational alpha_norm(static_cast<std::int64_t>(p.alpha), static_cast<std::int64_t>(n));
  p.beta = p.gamma * alpha_norm / Rational(100);
  p.beta_n = p.gamma * to_rational(p.alpha) / Rational(100);
  p.beta_prime_gate = Rational(10) * p.beta;
  p.beta_prime_right = p.alpha == 0 ? Rational(0) : Rational(4) * p.beta / alpha_norm;
  p.delta = p.gamma / Rational(100);
  p.epsilon = std::min(p.delta / Rational(2), p.gamma / Rational(200));
  p.degenerate_threshold = static_cast<std::size_t>(ceil_int(Rational(200) / p.gamma));
  return p;
}

}  // namespace alcs
