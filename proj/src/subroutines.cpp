#include "alcs/subroutines.hpp"

#include <algorithm>

namespace alcs {

std::size_t match_length(BitStringView a, BitStringView b, Symbol s) noexcept {
  return std::min(a.count(s), b.count(s));
}

SubsequenceWitness match(BitStringView a, BitStringView b, Symbol s) {
  const std::size_t k = match_length(a, b, s);
  SubsequenceWitness w;
  w.reserve(k);
  a.first_occurrences(s, k, 0, w.a_indices);
  b.first_occurrences(s, k, 0, w.b_indices);
  return w;
}

Symbol best_match_symbol(BitStringView a, BitStringView b) noexcept {
  return match_length(a, b, Symbol::one) > match_length(a, b, Symbol::zero) ? Symbol::one
                                                                             : Symbol::zero;
}

std::size_t best_match_length(BitStringView a, BitStringView b) noexcept {
  return std::max(match_length(a, b, Symbol::zero), match_length(a, b, Symbol::one));
}

SubsequenceWitness best_match(BitStringView a, BitStringView b) {
  return match(a, b, best_match_symbol(a, b));
}

GreedyResult greedy(BitStringView a1, BitStringView a2, BitStringView b) {
  const std::size_t ones1 = a1.ones();
  const std::size_t zeros1 = a1.size() - ones1;
  const std::size_t ones2 = a2.ones();
  const std::size_t zeros2 = a2.size() - ones2;
  const std::size_t m = b.size();
  const std::size_t ones_b = b.ones();

  GreedySplit best;
  bool have_best = false;
  for (std::size_t s = 0; s <= m; ++s) {
    const std::size_t left_ones = b.rank1(s);
    const std::size_t left_zeros = s - left_ones;
    const std::size_t right_ones = ones_b - left_ones;
    const std::size_t right_zeros = (m - s) - right_ones;

    const std::size_t l0 = std::min(zeros1, left_zeros);
    const std::size_t l1 = std::min(ones1, left_ones);
    const std::size_t r0 = std::min(zeros2, right_zeros);
    const std::size_t r1 = std::min(ones2, right_ones);
    GreedySplit cand{s, std::max(l0, l1), std::max(r0, r1),
                     l1 > l0 ? Symbol::one : Symbol::zero, r1 > r0 ? Symbol::one : Symbol::zero};
    if (!have_best || cand.value() > best.value()) {
      best = cand;
      have_best = true;
    }
  }

  GreedyResult out;
  out.split = best;
  const std::size_t s = best.split_point;
  out.witness = match(a1, b.subview({0, s}), best.left_symbol);
  out.witness.append(match(a2, b.subview({s, m}), best.right_symbol), a1.size(), s);
  return out;
}

}  // namespace alcs
