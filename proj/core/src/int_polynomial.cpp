#include "tracedist/int_polynomial.hpp"

#include <stdexcept>

namespace tracedist {

namespace {

void normalize(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

template <typename Seq>
std::vector<BigInt> indicator_coefficients(const Seq& entries) {
  std::vector<BigInt> c(entries.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i]) c[i + 1] = 1;
  }
  return c;
}

}  // namespace

IntPolynomial IntPolynomial::from_coefficients(std::vector<BigInt> coefficients) {
  IntPolynomial p;
  p.coefficients_ = std::move(coefficients);
  normalize(p.coefficients_);
  return p;
}

IntPolynomial IntPolynomial::from_indicator(const IndicatorVector& v) {
  return from_coefficients(indicator_coefficients(v.entries));
}

IntPolynomial IntPolynomial::from_indicator(const BitString& v) {
  return from_coefficients(indicator_coefficients(v.bits()));
}

IntPolynomial IntPolynomial::from_exponents(std::span<const int> exponents) {
  std::vector<BigInt> c;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("IntPolynomial::from_exponents: negative exponent");
    if (static_cast<std::size_t>(e) >= c.size()) c.resize(static_cast<std::size_t>(e) + 1, BigInt(0));
    c[static_cast<std::size_t>(e)] += 1;
  }
  return from_coefficients(std::move(c));
}

BigInt IntPolynomial::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return BigInt(0);
  return coefficients_[static_cast<std::size_t>(exponent)];
}

BigInt IntPolynomial::value_at_one() const {
  BigInt s = 0;
  for (const BigInt& c : coefficients_) s += c;
  return s;
}

BigInt IntPolynomial::l1_norm() const {
  BigInt s = 0;
  for (const BigInt& c : coefficients_) s += abs(c);
  return s;
}

bool IntPolynomial::coefficients_within_unit() const {
  for (const BigInt& c : coefficients_) {
    if (abs(c) > 1) return false;
  }
  return true;
}

Rational IntPolynomial::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * z + Rational(*it);
  }
  return acc;
}

GaussianRational IntPolynomial::evaluate(const GaussianRational& z) const {
  GaussianRational acc{Rational(0), Rational(0)};
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * z;
    acc.re += Rational(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coefficients_.size(), rhs.coefficients_.size()), BigInt(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i] += coefficients_[i];
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) c[i] -= rhs.coefficients_[i];
  return from_coefficients(std::move(c));
}

IntPolynomial IntPolynomial::times_z_minus_one() const {
  if (is_zero()) return IntPolynomial();
  std::vector<BigInt> c(coefficients_.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    c[i + 1] += coefficients_[i];
    c[i] -= coefficients_[i];
  }
  return from_coefficients(std::move(c));
}

namespace {

// One exact synthetic division by (z-1): f = (z-1) q + r with r = f(1).
// Returns true and writes q when r == 0.
bool divide_once(const std::vector<BigInt>& f, std::vector<BigInt>& q) {
  if (f.empty()) return false;
  q.assign(f.size() - 1, BigInt(0));
  BigInt carry = 0;  // running coefficient of the quotient, from the top
  for (std::size_t i = f.size(); i-- > 1;) {
    carry += f[i];
    q[i - 1] = carry;
  }
  const BigInt remainder = carry + f[0];
  return remainder == 0;
}

}  // namespace

int divisibility_order(const IntPolynomial& f, int order_cap) {
  if (f.is_zero()) throw std::invalid_argument("divisibility_order: zero polynomial");
  if (order_cap < 1) throw std::invalid_argument("divisibility_order: order_cap must be positive");
  std::vector<BigInt> cur = f.coefficients();
  int order = 0;
  std::vector<BigInt> q;
  while (order < order_cap && divide_once(cur, q)) {
    cur = q;
    ++order;
    if (cur.empty()) break;  // fully deflated (cannot happen for nonzero f)
  }
  return order;
}

IntPolynomial deflate(const IntPolynomial& f, int m) {
  if (m < 0) throw std::invalid_argument("deflate: negative order");
  if (f.is_zero()) throw std::invalid_argument("deflate: zero polynomial");
  std::vector<BigInt> cur = f.coefficients();
  std::vector<BigInt> q;
  for (int i = 0; i < m; ++i) {
    if (!divide_once(cur, q)) {
      throw std::invalid_argument("deflate: (z-1)^m does not divide f");
    }
    cur = q;
  }
  return IntPolynomial::from_coefficients(std::move(cur));
}

L1CheckResult coefficient_l1_check(const IntPolynomial& quotient, int n, int m,
                                   int precision_bits) {
  if (n < 1 || m < 1) throw std::invalid_argument("coefficient_l1_check: n, m must be positive");
  L1CheckResult out{quotient.l1_norm(), BigFloat(precision_bits), false};
  // (n+1) * (e n / m)^m
  BigFloat e(precision_bits);
  mpfr_set_ui(e.raw(), 1, MPFR_RNDN);
  mpfr_exp(e.raw(), e.raw(), MPFR_RNDN);
  const BigFloat base = e * BigFloat(static_cast<double>(n), precision_bits) /
                        BigFloat(static_cast<double>(m), precision_bits);
  out.bound = pow_ui(base, static_cast<unsigned long>(m)) *
              BigFloat(static_cast<double>(n + 1), precision_bits);
  out.ok = BigFloat::from_bigint(out.l1, precision_bits) <= out.bound;
  return out;
}

EvalResult eval_f(const IntPolynomial& f, const BigComplex& z, int precision_bits) {
  if (precision_bits < 64) throw std::invalid_argument("eval_f: precision must be >= 64 bits");
  EvalResult out{BigComplex(precision_bits), BigFloat(precision_bits), BigFloat(precision_bits)};
  const BigFloat zabs = BigComplex(z.re, z.im).abs();
  BigFloat mass(0.0, precision_bits);  // sum |c_i| |z|^i via Horner on magnitudes
  BigComplex acc(precision_bits);
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
    acc = acc * z;
    mass *= zabs;
    const BigFloat c = BigFloat::from_bigint(*it, precision_bits);
    acc.re += c;
    mass += abs(c);
  }
  out.value = acc;
  out.abs_value = acc.abs();
  const int deg = std::max(0, f.degree());
  out.error_bound = BigFloat(static_cast<double>(deg), precision_bits) *
                    BigFloat::pow2(1 - precision_bits, precision_bits) * mass;
  return out;
}

}  // namespace tracedist
