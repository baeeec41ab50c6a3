#pragma once

#include <cstddef>
#include <stdexcept>

#include "alcs/bit_string.hpp"
#include "alcs/witness.hpp"

namespace alcs::oracle {

// Raised when an input exceeds an oracle's feasibility cap.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::size_t lcs_length = 0;
  SubsequenceWitness witness;
  std::size_t fact1_upper = 0;
};

inline constexpr std::size_t kBruteforceCap = 16;
inline constexpr std::size_t kQuadraticCap = 20000;

// Quadratic DP with divide-and-conquer traceback in linear space.
OracleResult lcs_dp(BitStringView a, BitStringView b);

// LCS length by the Allison-Dix bit-vector recurrence, O(|a|·|b|/64).
std::size_t lcs_length(BitStringView a, BitStringView b);

// Max over all subsequences of a of the longest prefix embeddable in b.
// Throws OracleRefusal when |a| > kBruteforceCap.
std::size_t lcs_bruteforce(BitStringView a, BitStringView b);

// min{0(A),0(B)} + min{1(A),1(B)}
std::size_t fact1_upper(BitStringView a, BitStringView b) noexcept;

// True iff the exact indel distance equals |a| + |b| - 2·LCS.
bool ed_lcs_identity_check(BitStringView a, BitStringView b);

}  // namespace alcs::oracle
