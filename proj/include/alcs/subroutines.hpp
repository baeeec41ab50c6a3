#pragma once

#include <cstddef>

#include "alcs/bit_string.hpp"
#include "alcs/witness.hpp"

namespace alcs {

// min(s(a), s(b)): the length Match(a, b, s) achieves.
std::size_t match_length(BitStringView a, BitStringView b, Symbol s) noexcept;

// The all-s common subsequence of length min(s(a), s(b)), pairing the first
// occurrences of s in each string.
SubsequenceWitness match(BitStringView a, BitStringView b, Symbol s);

// Symbol whose Match is longer; ties go to zero.
Symbol best_match_symbol(BitStringView a, BitStringView b) noexcept;
std::size_t best_match_length(BitStringView a, BitStringView b) noexcept;
SubsequenceWitness best_match(BitStringView a, BitStringView b);

// The cut B = B[0, split_point) + B[split_point, |B|) chosen by greedy, with
// the BestMatch value and symbol on each side.
struct GreedySplit {
  std::size_t split_point = 0;
  std::size_t left_value = 0;
  std::size_t right_value = 0;
  Symbol left_symbol = Symbol::zero;
  Symbol right_symbol = Symbol::zero;

  std::size_t value() const noexcept { return left_value + right_value; }
};

struct GreedyResult {
  SubsequenceWitness witness;
  GreedySplit split;
};

// Maximises best_match(a1, B1) + best_match(a2, B2) over every contiguous
// cut of b, smallest split point on ties. a2 is taken to follow a1 directly
// in A, so the second half of the witness has its A-positions shifted by |a1|.
GreedyResult greedy(BitStringView a1, BitStringView a2, BitStringView b);

}  // namespace alcs
