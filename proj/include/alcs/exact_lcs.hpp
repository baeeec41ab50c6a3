#pragma once

#include <cstdint>
#include <vector>

#include "alcs/bit_string.hpp"
#include "alcs/witness.hpp"

namespace alcs {

// Exact LCS with an optimal witness. Hirschberg recursion split on the ones
// of `a`; each half's score row is computed either by a run-compressed sweep
// costing O(|b|) per one of `a`, or bit-parallel in O(|a|·|b|/64), whichever
// is cheaper for that subproblem. With few ones in `a` this is
// O(ones(a)·|b|) time and O(|a| + |b|) space.
SubsequenceWitness exact_lcs(BitStringView a, BitStringView b);

namespace detail {
// row[q] = LCS(a, b[0, q)) for q in [0, |b|].
std::vector<std::uint32_t> lcs_row_sparse(BitStringView a, BitStringView b);
std::vector<std::uint32_t> lcs_row_bitparallel(BitStringView a, BitStringView b);
}  // namespace detail

}  // namespace alcs
