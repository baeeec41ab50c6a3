#include "alcs/oracle/oracles.hpp"
#include "alcs/symmetry.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace alcs;
using test_util::bs;

TEST_CASE("lcs_dp examples") {
  const auto r = oracle::lcs_dp(bs("0101"), bs("0011"));
  CHECK(r.lcs_length == 3);
  CHECK(r.fact1_upper == 4);
  CHECK(verify_witness(bs("0101"), bs("0011"), r.witness));
  const std::string w = witness_string(bs("0101"), r.witness);
  CHECK((w == "001" || w == "011"));
  CHECK(oracle::lcs_dp(bs("011010"), bs("011010")).lcs_length == 6);
  CHECK(oracle::lcs_dp(bs("0000"), bs("1111")).lcs_length == 0);
  CHECK(oracle::lcs_dp(bs(""), bs("0101")).witness.empty());
}

TEST_CASE("lcs_bruteforce examples and cap") {
  CHECK(oracle::lcs_bruteforce(bs("01"), bs("10")) == 1);
  CHECK(oracle::lcs_bruteforce(bs("0101"), bs("0011")) == 3);
  CHECK(oracle::lcs_bruteforce(bs(""), bs("1")) == 0);
  CHECK_THROWS_AS(oracle::lcs_bruteforce(bs("01010101010101010"), bs("0")), oracle::OracleRefusal);
}

TEST_CASE("fact1_upper examples") {
  CHECK(oracle::fact1_upper(bs("0101"), bs("0011")) == 4);
  CHECK(oracle::fact1_upper(bs("0000"), bs("1111")) == 0);
}

TEST_CASE("dp, bit-vector and brute-force oracles agree, exhaustive to length 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t m : {n, n / 2 + 1}) {
      for (std::uint64_t i = 0; i < (1ULL << n); ++i) {
        for (std::uint64_t j = 0; j < (1ULL << m); ++j) {
          const BitString a = test_util::nth_string(n, i), b = test_util::nth_string(m, j);
          const auto dp = oracle::lcs_dp(a, b);
          REQUIRE(dp.lcs_length == oracle::lcs_bruteforce(a, b));
          REQUIRE(dp.lcs_length == oracle::lcs_length(a, b));
          REQUIRE(dp.lcs_length <= dp.fact1_upper);
          REQUIRE(dp.witness.size() == dp.lcs_length);
          REQUIRE(verify_witness(a, b, dp.witness));
        }
      }
    }
  }
}

TEST_CASE("oracle LCS is invariant under the symmetries") {
  harness::SplitMix64 rng(91);
  for (int trial = 0; trial < 60; ++trial) {
    const BitString a = test_util::random_bits(rng, rng.below(500));
    const BitString b = test_util::random_bits(rng, rng.below(500), Rational(1, 3));
    const std::size_t base = oracle::lcs_dp(a, b).lcs_length;
    REQUIRE(base == oracle::lcs_length(a, b));
    for (const SymmetryTransform& t : SymmetryTransform::all()) {
      const StringPair p = apply_transform(a, b, t);
      CHECK(oracle::lcs_length(p.a, p.b) == base);
    }
  }
}
