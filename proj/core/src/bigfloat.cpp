#include "tracedist/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tracedist {

namespace {

int checked_bits(int precision_bits) {
  if (precision_bits < 2) throw std::invalid_argument("BigFloat: precision must be >= 2 bits");
  return precision_bits;
}

}  // namespace

BigFloat::BigFloat(int precision_bits) {
  mpfr_init2(v_, checked_bits(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double value, int precision_bits) {
  mpfr_init2(v_, checked_bits(precision_bits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_bigint(const BigInt& value, int precision_bits) {
  BigFloat out(precision_bits);
  const std::string digits = value.str();
  if (mpfr_set_str(out.v_, digits.c_str(), 10, MPFR_RNDN) != 0 && digits.empty()) {
    throw std::invalid_argument("BigFloat::from_bigint: conversion failed");
  }
  return out;
}

BigFloat BigFloat::from_rational(const Rational& value, int precision_bits) {
  const BigFloat num = from_bigint(numerator(value), precision_bits + 8);
  const BigFloat den = from_bigint(denominator(value), precision_bits + 8);
  BigFloat out(precision_bits);
  mpfr_div(out.v_, num.v_, den.v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pi(int precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow2(int e, int precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
  return out;
}

int BigFloat::precision() const { return static_cast<int>(mpfr_get_prec(v_)); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
  if (raw == nullptr) return "nan";
  std::string mantissa(raw);
  mpfr_free_str(raw);
  const bool negative = !mantissa.empty() && mantissa[0] == '-';
  std::string body = negative ? mantissa.substr(1) : mantissa;
  std::string out = negative ? "-" : "";
  out += "0." + body + "e" + std::to_string(static_cast<long>(exp));
  return out;
}

namespace {

int joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_prec(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_neg(out.v_, a.v_, MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_abs(out.v_, a.v_, MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_sqrt(out.v_, a.v_, MPFR_RNDN);
  return out;
}

BigFloat cos(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_cos(out.v_, a.v_, MPFR_RNDN);
  return out;
}

BigFloat sin(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_sin(out.v_, a.v_, MPFR_RNDN);
  return out;
}

BigFloat pow_ui(const BigFloat& a, unsigned long e) {
  BigFloat out(a.precision());
  mpfr_pow_ui(out.v_, a.v_, e, MPFR_RNDN);
  return out;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

BigComplex::BigComplex(int precision_bits) : re(precision_bits), im(precision_bits) {}

BigComplex::BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

BigComplex::BigComplex(double real, double imag, int precision_bits)
    : re(real, precision_bits), im(imag, precision_bits) {}

int BigComplex::precision() const { return std::max(re.precision(), im.precision()); }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re + b.re, a.im + b.im);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re - b.re, a.im - b.im);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator*(const BigComplex& a, const BigFloat& b) {
  return BigComplex(a.re * b, a.im * b);
}

BigFloat BigComplex::norm() const { return re * re + im * im; }

BigFloat BigComplex::abs() const { return sqrt(norm()); }

}  // namespace tracedist
