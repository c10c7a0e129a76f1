#include "tracedist/exact_arith.hpp"

#include <stdexcept>
#include <string>

namespace tracedist {

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    const BigInt num{std::string(text.substr(0, slash))};
    const BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("parse_fraction: malformed rational '" + std::string(text) +
                                "': " + e.what());
  }
}

BigInt pow_int(const BigInt& base, int e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  BigInt acc = 1;
  BigInt b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    if (k > 1) b *= b;
  }
  return acc;
}

Rational pow_rational(const Rational& base, int e) {
  if (e < 0) throw std::invalid_argument("pow_rational: negative exponent");
  Rational acc = 1;
  Rational b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    if (k > 1) b *= b;
  }
  return acc;
}

}  // namespace tracedist
