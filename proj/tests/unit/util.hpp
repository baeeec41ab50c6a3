#pragma once

#include <string>
#include <vector>

#include "alcs/bit_string.hpp"
#include "alcs/harness/prng.hpp"

namespace test_util {

inline alcs::BitString bs(const std::string& s) { return alcs::BitString::parse(s); }

inline alcs::BitString random_bits(alcs::harness::SplitMix64& rng, std::size_t n,
                                   alcs::Rational p = alcs::Rational(1, 2)) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = rng.bernoulli(p) ? 1 : 0;
  return alcs::BitString::from_bits(bits);
}

// All strings of length n, indexed by their bit pattern.
inline alcs::BitString nth_string(std::size_t n, std::uint64_t idx) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(idx >> i & 1U);
  return alcs::BitString::from_bits(bits);
}

}  // namespace test_util
