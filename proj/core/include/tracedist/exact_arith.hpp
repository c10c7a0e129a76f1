#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string_view>

namespace tracedist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" (or a bare integer "p") into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_fraction(std::string_view text);

/// Exact integer power, e >= 0.
BigInt pow_int(const BigInt& base, int e);
Rational pow_rational(const Rational& base, int e);

}  // namespace tracedist
