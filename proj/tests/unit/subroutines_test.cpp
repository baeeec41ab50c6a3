#include <algorithm>

#include "alcs/oracle/oracles.hpp"
#include "alcs/subroutines.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace alcs;
using test_util::bs;

TEST_CASE("match examples") {
  const auto w = match(bs("0101"), bs("0011"), Symbol::zero);
  CHECK(w == SubsequenceWitness{{0, 2}, {0, 1}});
  CHECK(match(bs("111"), bs("000"), Symbol::one).empty());
  CHECK(match(bs("0100110"), bs("1011"), Symbol::one).size() == 3);
}

TEST_CASE("best_match examples") {
  CHECK(best_match(bs("000111"), bs("110")).size() == 2);
  CHECK(best_match_symbol(bs("000111"), bs("110")) == Symbol::one);
  CHECK(best_match(bs("01"), bs("01")).size() == 1);
  CHECK(best_match_symbol(bs("01"), bs("01")) == Symbol::zero);
  CHECK(best_match(bs("0011"), bs("0011")).size() == 2);
}

TEST_CASE("greedy examples") {
  auto g = greedy(bs("11"), bs("00"), bs("1100"));
  CHECK(g.split.split_point == 2);
  CHECK(g.split.value() == 4);
  CHECK(g.witness.size() == 4);
  g = greedy(bs("00"), bs("11"), bs("1100"));
  CHECK(g.split.value() == 2);
  CHECK(g.split.split_point == 0);
  g = greedy(bs("1"), bs("0"), bs("10"));
  CHECK(g.split.split_point == 1);
  CHECK(g.split.value() == 2);
}

TEST_CASE("match and best_match equal the count formulas, exhaustive to length 10") {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::uint64_t i = 0; i < (1ULL << n); i += (n > 8 ? 7 : 1)) {
      const BitString a = test_util::nth_string(n, i);
      for (std::size_t m : {n / 2, n}) {
        for (std::uint64_t j = 0; j < (1ULL << m); j += (m > 8 ? 13 : 1)) {
          const BitString b = test_util::nth_string(m, j);
          const auto w0 = match(a, b, Symbol::zero);
          const auto w1 = match(a, b, Symbol::one);
          REQUIRE(w0.size() == std::min(a.zeros(), b.zeros()));
          REQUIRE(w1.size() == std::min(a.ones(), b.ones()));
          REQUIRE(verify_witness(a, b, w0));
          REQUIRE(verify_witness(a, b, w1));
          const auto bm = best_match(a, b);
          REQUIRE(bm.size() == std::max(w0.size(), w1.size()));
          REQUIRE(verify_witness(a, b, bm));
        }
      }
    }
  }
}

TEST_CASE("best_match is at least half of the exact LCS, exhaustive to length 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::uint64_t i = 0; i < (1ULL << n); ++i) {
      for (std::uint64_t j = 0; j < (1ULL << n); ++j) {
        const BitString a = test_util::nth_string(n, i), b = test_util::nth_string(n, j);
        REQUIRE(2 * best_match_length(a, b) >= oracle::lcs_length(a, b));
      }
    }
  }
}

namespace {

std::size_t greedy_bruteforce(BitStringView a1, BitStringView a2, BitStringView b) {
  std::size_t best = 0;
  for (std::size_t s = 0; s <= b.size(); ++s) {
    best = std::max(best, best_match_length(a1, b.subview({0, s})) +
                              best_match_length(a2, b.subview({s, b.size()})));
  }
  return best;
}

void check_greedy(const BitString& a1, const BitString& a2, const BitString& b) {
  const GreedyResult g = greedy(a1, a2, b);
  REQUIRE(g.split.value() == greedy_bruteforce(a1, a2, b));
  REQUIRE(g.witness.size() == g.split.value());
  std::vector<std::uint8_t> joined;
  for (std::size_t i = 0; i < a1.size(); ++i) joined.push_back(a1.bit(i));
  for (std::size_t i = 0; i < a2.size(); ++i) joined.push_back(a2.bit(i));
  REQUIRE(verify_witness(BitString::from_bits(joined), b, g.witness));
}

}  // namespace

TEST_CASE("greedy equals the brute-force split maximum, exhaustive to size 8") {
  for (std::size_t la = 0; la <= 4; ++la) {
    for (std::size_t lb = 0; la + lb <= 8 && lb <= 4; ++lb) {
      for (std::size_t m = 0; m <= 8; m += (m < 4 ? 1 : 2)) {
        for (std::uint64_t x = 0; x < (1ULL << la); ++x) {
          for (std::uint64_t y = 0; y < (1ULL << lb); ++y) {
            for (std::uint64_t z = 0; z < (1ULL << m); ++z) {
              check_greedy(test_util::nth_string(la, x), test_util::nth_string(lb, y),
                           test_util::nth_string(m, z));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("greedy equals the brute-force split maximum on random inputs to length 500") {
  harness::SplitMix64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.below(500);
    const std::size_t cut = rng.below(m + 1);
    const Rational p(static_cast<std::int64_t>(1 + rng.below(9)), 10);
    check_greedy(test_util::random_bits(rng, cut, p), test_util::random_bits(rng, m - cut),
                 test_util::random_bits(rng, m, p));
  }
}
