#include <stdexcept>

#include "alcs/errors.hpp"
#include "alcs/rational.hpp"
#include "alcs/symmetry.hpp"
#include "alcs/witness.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace alcs;
using test_util::bs;

TEST_CASE("parse accepts one trailing newline and nothing else") {
  CHECK(bs("0101\n").to_string() == "0101");
  CHECK(bs("").size() == 0);
  CHECK_THROWS_AS(bs("01 1"), ParseError);
  CHECK_THROWS_AS(bs("01\n\n"), ParseError);
  CHECK_THROWS_AS(bs("012"), ParseError);
}

TEST_CASE("count examples") {
  CHECK(bs("0101").count({0, 4}, Symbol::zero) == 2);
  CHECK(bs("0101").count({2, 2}, Symbol::one) == 0);
  CHECK(bs("0100110").count({1, 6}, Symbol::one) == 3);
  CHECK_THROWS_AS(bs("0101").count({2, 5}, Symbol::one), std::out_of_range);
  CHECK_THROWS_AS(bs("0101").count({3, 2}, Symbol::one), std::out_of_range);
}

TEST_CASE("counts agree with a linear scan across word boundaries") {
  harness::SplitMix64 rng(11);
  for (std::size_t n : {1, 63, 64, 65, 127, 128, 129, 300}) {
    const BitString s = test_util::random_bits(rng, n);
    const std::string text = s.to_string();
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t lo = rng.below(n + 1), hi = rng.below(n + 1);
      if (lo > hi) std::swap(lo, hi);
      std::size_t ones = 0;
      for (std::size_t i = lo; i < hi; ++i) ones += text[i] == '1';
      CHECK(s.count({lo, hi}, Symbol::one) == ones);
      CHECK(s.count({lo, hi}, Symbol::zero) == hi - lo - ones);
      const BitStringView v = s.view({lo, hi});
      CHECK(v.ones() == ones);
      CHECK(v.to_string() == text.substr(lo, hi - lo));
      std::size_t split = lo + (hi - lo) / 2;
      CHECK(s.count({lo, split}, Symbol::one) + s.count({split, hi}, Symbol::one) == ones);
    }
  }
}

TEST_CASE("views: words, subviews, reversal, complement") {
  harness::SplitMix64 rng(12);
  const BitString s = test_util::random_bits(rng, 200);
  const std::string t = s.to_string();
  const BitStringView v = s.view({37, 180});
  for (std::size_t w = 0; w < v.word_count(); ++w) {
    for (std::size_t i = 0; i < 64; ++i) {
      const std::size_t p = w * 64 + i;
      const bool expect = p < v.size() && t[37 + p] == '1';
      CHECK(((v.word(w) >> i) & 1U) == (expect ? 1U : 0U));
    }
  }
  CHECK(v.subview({10, 20}).to_string() == t.substr(47, 10));
  std::string r(t.rbegin(), t.rend());
  CHECK(s.reversed().to_string() == r);
  std::string c = t;
  for (auto& ch : c) ch = ch == '0' ? '1' : '0';
  CHECK(s.complemented().to_string() == c);
  CHECK(BitString::from_view(v).to_string() == t.substr(37, 143));
  const BitStringView empty;
  CHECK(empty.size() == 0);
  CHECK(empty.ones() == 0);
}

TEST_CASE("apply_transform examples") {
  auto ab = apply_transform(bs("01"), bs("10"), {true, false, false});
  CHECK(ab.a.to_string() == "10");
  CHECK(ab.b.to_string() == "01");
  ab = apply_transform(bs("01"), bs("10"), {false, true, false});
  CHECK(ab.a.to_string() == "10");
  CHECK(ab.b.to_string() == "01");
  ab = apply_transform(bs("011"), bs("000"), {false, false, true});
  CHECK(ab.a.to_string() == "110");
  CHECK(ab.b.to_string() == "000");
  ab = apply_transform(bs("0011"), bs("0111"), {true, true, true});
  CHECK(ab.a.to_string() == "0001");
  CHECK(ab.b.to_string() == "0011");
}

TEST_CASE("pull_back_witness examples") {
  SubsequenceWitness w{{1, 2}, {0, 3}};
  CHECK(pull_back_witness(w, {}, 4, 4) == w);
  const SubsequenceWitness swapped = pull_back_witness(w, {true, false, false}, 4, 4);
  CHECK(swapped == SubsequenceWitness{{0, 3}, {1, 2}});
  const SubsequenceWitness rev{{0, 3}, {1, 2}};
  CHECK(pull_back_witness(rev, {false, false, true}, 4, 4) == SubsequenceWitness{{0, 3}, {1, 2}});
  CHECK_THROWS_AS(pull_back_witness(SubsequenceWitness{{2, 1}, {0, 1}}, {}, 4, 4),
                  CertificationError);
}

TEST_CASE("pull_back after apply_transform keeps witnesses valid for all eight transforms") {
  harness::SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const BitString a = test_util::random_bits(rng, 1 + rng.below(40));
    const BitString b = test_util::random_bits(rng, 1 + rng.below(40));
    for (const SymmetryTransform& t : SymmetryTransform::all()) {
      const StringPair p = apply_transform(a, b, t);
      // a simple valid witness on the transformed pair: greedy left-to-right matching
      SubsequenceWitness w;
      std::size_t j = 0;
      for (std::size_t i = 0; i < p.a.size() && j < p.b.size(); ++i) {
        while (j < p.b.size() && p.b.bit(j) != p.a.bit(i)) ++j;
        if (j < p.b.size()) w.push(i, j++);
      }
      REQUIRE(verify_witness(p.a, p.b, w));
      const SubsequenceWitness back = pull_back_witness(w, t, a.size(), b.size());
      CHECK(verify_witness(a, b, back));
      CHECK(back.size() == w.size());
    }
  }
}

TEST_CASE("verify_witness examples") {
  CHECK(verify_witness(bs("0011"), bs("0101"), SubsequenceWitness{{0, 2}, {0, 1}}));
  CHECK_FALSE(verify_witness(bs("0011"), bs("0101"), SubsequenceWitness{{0, 2}, {1, 0}}));
  CHECK_FALSE(verify_witness(bs("0011"), bs("0101"), SubsequenceWitness{{0}, {1}}));
  CHECK_FALSE(verify_witness(bs("0011"), bs("0101"), SubsequenceWitness{{0, 4}, {0, 1}}));
  CHECK_FALSE(verify_witness(bs("0011"), bs("0101"), SubsequenceWitness{{0, 1}, {0}}));
  CHECK(verify_witness(bs(""), bs("01"), SubsequenceWitness{}));
}

TEST_CASE("verify_witness agrees with a naive checker") {
  harness::SplitMix64 rng(14);
  for (int trial = 0; trial < 2000; ++trial) {
    const BitString a = test_util::random_bits(rng, rng.below(8));
    const BitString b = test_util::random_bits(rng, rng.below(8));
    SubsequenceWitness w;
    const std::size_t k = rng.below(4);
    for (std::size_t t = 0; t < k; ++t) w.push(rng.below(9), rng.below(9));
    bool ok = true;
    for (std::size_t t = 0; t < w.size(); ++t) {
      const std::size_t i = w.a_indices[t], j = w.b_indices[t];
      if (i >= a.size() || j >= b.size() || a.bit(i) != b.bit(j)) ok = false;
      if (t > 0 && (w.a_indices[t - 1] >= i || w.b_indices[t - 1] >= j)) ok = false;
    }
    CHECK(verify_witness(a, b, w) == ok);
  }
}

TEST_CASE("rationals parse and round exactly") {
  CHECK(parse_rational("7/3") == Rational(7, 3));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK_THROWS(parse_rational("x"));
  CHECK(floor_int(Rational(-7, 2)) == -4);
  CHECK(ceil_int(Rational(-7, 2)) == -3);
  CHECK(ceil_int(Rational(7, 2)) == 4);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
}
