#pragma once

#include <mpfr.h>

#include <string>

#include "tracedist/exact_arith.hpp"

namespace tracedist {

/// Thin RAII wrapper over an mpfr_t. Precision is fixed per value at
/// construction; binary operations produce a result carrying the larger of
/// the operand precisions (round-to-nearest throughout). No global or
/// thread-local precision state is involved, so values can be freely moved
/// across threads.
class BigFloat {
 public:
  explicit BigFloat(int precision_bits = 64);
  BigFloat(double value, int precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_bigint(const BigInt& value, int precision_bits);
  static BigFloat from_rational(const Rational& value, int precision_bits);
  static BigFloat pi(int precision_bits);
  /// 2^e, exact.
  static BigFloat pow2(int e, int precision_bits);

  int precision() const;
  double to_double() const;
  std::string str(int digits = 20) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat sin(const BigFloat& a);
  friend BigFloat pow_ui(const BigFloat& a, unsigned long e);

  friend int compare(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

/// Complex number over BigFloat.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(int precision_bits = 64);
  BigComplex(BigFloat real, BigFloat imag);
  BigComplex(double real, double imag, int precision_bits);

  int precision() const;

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigFloat& b);

  /// re^2 + im^2.
  BigFloat norm() const;
  /// sqrt(norm()).
  BigFloat abs() const;

  double real_d() const { return re.to_double(); }
  double imag_d() const { return im.to_double(); }
};

}  // namespace tracedist
