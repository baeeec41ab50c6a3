#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace alcs {

// Exact rationals for every threshold in the decision path.
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-2", "2.5", "7/3".
Rational parse_rational(std::string_view text);

std::int64_t floor_int(const Rational& r) noexcept;
std::int64_t ceil_int(const Rational& r) noexcept;

inline Rational to_rational(std::size_t v) noexcept {
  return Rational(static_cast<std::int64_t>(v));
}

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

double to_double(const Rational& r) noexcept;

}  // namespace alcs
