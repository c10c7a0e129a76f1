#pragma once

#include <span>
#include <vector>

#include "tracedist/bigfloat.hpp"
#include "tracedist/bitstring.hpp"
#include "tracedist/exact_arith.hpp"

namespace tracedist {

/// Complex rational a + bi with exact components.
struct GaussianRational {
  Rational re;
  Rational im;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  /// |a + bi|^2, exact.
  Rational norm() const { return re * re + im * im; }
};

/// Dense polynomial with exact integer coefficients; coefficient index equals
/// the exponent. Always stored normalized (no zero leading coefficient).
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial from_coefficients(std::vector<BigInt> coefficients);
  /// sum_i v_i z^i over 1-based positions of the indicator vector.
  static IntPolynomial from_indicator(const IndicatorVector& v);
  static IntPolynomial from_indicator(const BitString& v);
  /// sum_i z^(e_i) over a multiset of nonnegative exponents.
  static IntPolynomial from_exponents(std::span<const int> exponents);

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(int exponent) const;

  BigInt value_at_one() const;
  BigInt l1_norm() const;
  bool coefficients_within_unit() const;

  Rational evaluate(const Rational& z) const;
  GaussianRational evaluate(const GaussianRational& z) const;

  IntPolynomial operator-(const IntPolynomial& rhs) const;
  /// Multiplication by (z-1), for round-trip checks.
  IntPolynomial times_z_minus_one() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Largest m <= order_cap such that (z-1)^m divides f, by repeated exact
/// synthetic division. Throws on the zero polynomial.
int divisibility_order(const IntPolynomial& f, int order_cap);

/// Exact quotient f / (z-1)^m. Throws when (z-1)^m does not divide f.
IntPolynomial deflate(const IntPolynomial& f, int m);

/// Coefficient mass bound for quotients of unit-coefficient polynomials:
/// checks sum_i |c_i| <= (n+1) (e n / m)^m, the right side evaluated in high
/// precision.
struct L1CheckResult {
  BigInt l1;
  BigFloat bound;
  bool ok = false;
};
L1CheckResult coefficient_l1_check(const IntPolynomial& quotient, int n, int m,
                                   int precision_bits = 96);

/// Error-bounded Horner evaluation: value, |value|, and an absolute rounding
/// error bound degree * 2^(1-precision) * sum_i |c_i| |z|^i valid for the
/// returned value.
struct EvalResult {
  BigComplex value;
  BigFloat abs_value;
  BigFloat error_bound;
};
EvalResult eval_f(const IntPolynomial& f, const BigComplex& z, int precision_bits);

}  // namespace tracedist
