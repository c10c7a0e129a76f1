#include "tracedist/circle_search.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace tracedist {

namespace {

constexpr int kMaxEscalations = 5;
constexpr int kReportBits = 128;

struct Comparison {
  bool conclusive = false;
  bool holds = false;
};

// Certified a >= b given absolute error radii on both sides.
Comparison certified_ge(const BigFloat& a, const BigFloat& a_err, const BigFloat& b,
                        const BigFloat& b_err) {
  Comparison c;
  if (a - a_err >= b + b_err) {
    c.conclusive = true;
    c.holds = true;
  } else if (a + a_err < b - b_err) {
    c.conclusive = true;
    c.holds = false;
  }
  return c;
}

// |(z - q)/(1 - q)|^n with a coarse but safe absolute error bound.
void channel_factor_bounds(const BigComplex& z, const BigFloat& q, int n, int prec,
                           BigFloat& value, BigFloat& err) {
  const BigFloat one(1.0, prec);
  const BigFloat dx = z.re - q;
  const BigFloat ratio = sqrt(dx * dx + z.im * z.im) / (one - q);
  value = pow_ui(ratio, static_cast<unsigned long>(n));
  // Half a dozen roundings feeding an n-th power.
  err = value * BigFloat(static_cast<double>(4 * n + 24), prec) * BigFloat::pow2(1 - prec, prec);
}

struct ExactCandidate {
  GaussianRational unit;  // e^(2 pi i j / D)
  GaussianRational z;     // 1 + unit / n^2
};

// Exact candidate set; only D = 2 and D = 4 have Gaussian-rational roots of
// unity. Order follows j = 1..D.
std::vector<ExactCandidate> exact_candidates(int n, int D) {
  const Rational inv_n2 = Rational(1, BigInt(n) * n);
  std::vector<GaussianRational> units;
  if (D == 2) {
    units = {{Rational(-1), Rational(0)}, {Rational(1), Rational(0)}};
  } else {
    units = {{Rational(0), Rational(1)},
             {Rational(-1), Rational(0)},
             {Rational(0), Rational(-1)},
             {Rational(1), Rational(0)}};
  }
  std::vector<ExactCandidate> out;
  out.reserve(units.size());
  for (const auto& u : units) {
    GaussianRational z{Rational(1) + u.re * inv_n2, u.im * inv_n2};
    out.push_back({u, z});
  }
  return out;
}

void search_exact(const IntPolynomial& f, int n, int m, int D, const ChannelParam& ch,
                  Certificate& cert) {
  const IntPolynomial& quotient = cert.quotient;
  const auto candidates = exact_candidates(n, D);

  std::optional<Rational> best_norm;
  std::size_t best_j = 0;
  GaussianRational avg{Rational(0), Rational(0)};
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const Rational norm = f.evaluate(candidates[j].z).norm();
    if (!best_norm || norm > *best_norm) {
      best_norm = norm;
      best_j = j;
    }
    avg = avg + quotient.evaluate(candidates[j].z);
  }
  const GaussianRational& zstar = candidates[best_j].z;

  const Rational bound = Rational(1, pow_int(BigInt(n), 2 * m) * D);
  const bool value_ok = *best_norm >= bound * bound;
  const Rational avg_norm = avg.norm();
  cert.avg_at_least_one = avg_norm >= 1;

  bool channel_ok = false;
  if (ch.is_exact()) {
    const Rational q = ch.exact_q();
    const Rational dx = zstar.re - q;
    const Rational ratio2 = (dx * dx + zstar.im * zstar.im) / ((1 - q) * (1 - q));
    const Rational cf2 = pow_rational(ratio2, n);
    channel_ok = cf2 <= 4;
    cert.channel_factor = sqrt(BigFloat::from_rational(cf2, kReportBits));
  } else {
    // Non-rational q: certify the channel factor in floating point.
    for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
      const int p = kReportBits << attempt;
      BigComplex z_hp(BigFloat::from_rational(zstar.re, p), BigFloat::from_rational(zstar.im, p));
      BigFloat value(p), err(p);
      channel_factor_bounds(z_hp, BigFloat(ch.q(), p), n, p, value, err);
      const Comparison cmp = certified_ge(BigFloat(2.0, p), BigFloat(p), value, err);
      if (cmp.conclusive) {
        channel_ok = cmp.holds;
        cert.channel_factor = value;
        break;
      }
      if (attempt == kMaxEscalations) {
        throw PrecisionExhaustedError("lemma6_search: channel factor comparison inconclusive");
      }
    }
  }

  cert.witness_z = {static_cast<double>(zstar.re), static_cast<double>(zstar.im)};
  cert.witness_value = sqrt(BigFloat::from_rational(*best_norm, kReportBits));
  cert.bound = BigFloat::from_rational(bound, kReportBits);
  cert.avg_over_candidates = sqrt(BigFloat::from_rational(avg_norm, kReportBits));
  cert.valid = value_ok && channel_ok;
  cert.exact_arithmetic = true;
  cert.precision_bits = kReportBits;
}

void search_float(const IntPolynomial& f, int n, int m, int D, const ChannelParam& ch,
                  int base_bits, Certificate& cert) {
  const IntPolynomial& quotient = cert.quotient;
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
    const int p = base_bits << attempt;
    const BigFloat one(1.0, p);
    const BigFloat inv_n2 = one / BigFloat(static_cast<double>(n) * n, p);
    const BigFloat two_pi = BigFloat::pi(p) * BigFloat(2.0, p);

    // Evaluate f and the quotient at all D points.
    int best_j = -1;
    BigFloat best_value(p), best_err(p);
    BigComplex best_z(p);
    BigComplex avg(p);
    BigFloat avg_err(p);
    for (int j = 1; j <= D; ++j) {
      const BigFloat angle =
          two_pi * BigFloat(static_cast<double>(j), p) / BigFloat(static_cast<double>(D), p);
      const BigComplex z(one + cos(angle) * inv_n2, sin(angle) * inv_n2);
      // eval_f bounds the Horner rounding; the candidate point itself
      // carries a few ulp from cos/sin, worth at most deg * mass * 4 ulp on
      // the value. A factor 8 swallows both.
      const BigFloat slack(8.0, p);
      const EvalResult fr = eval_f(f, z, p);
      if (best_j < 0 || fr.abs_value > best_value) {
        best_j = j;
        best_value = fr.abs_value;
        best_err = fr.error_bound * slack;
        best_z = z;
      }
      const EvalResult qr = eval_f(quotient, z, p);
      avg += qr.value;
      avg_err += qr.error_bound * slack;
    }
    // Accumulated sums add D more roundings; widen slightly.
    avg_err += avg.abs() * BigFloat(static_cast<double>(4 * D), p) * BigFloat::pow2(1 - p, p);

    const BigFloat bound =
        one / BigFloat::from_bigint(pow_int(BigInt(n), 2 * m) * D, p);
    const BigFloat bound_err = bound * BigFloat::pow2(3 - p, p);

    const Comparison value_cmp = certified_ge(best_value, best_err, bound, bound_err);
    const Comparison avg_cmp = certified_ge(avg.abs(), avg_err, one, BigFloat(p));

    BigFloat cf_value(p), cf_err(p);
    channel_factor_bounds(best_z, ch.is_exact() ? BigFloat::from_rational(ch.exact_q(), p)
                                                : BigFloat(ch.q(), p),
                          n, p, cf_value, cf_err);
    const Comparison channel_cmp = certified_ge(BigFloat(2.0, p), BigFloat(p), cf_value, cf_err);

    if (value_cmp.conclusive && avg_cmp.conclusive && channel_cmp.conclusive) {
      cert.witness_z = {best_z.real_d(), best_z.imag_d()};
      cert.witness_value = best_value;
      cert.bound = bound;
      cert.channel_factor = cf_value;
      cert.avg_over_candidates = avg.abs();
      cert.avg_at_least_one = avg_cmp.holds;
      cert.valid = value_cmp.holds && channel_cmp.holds;
      cert.exact_arithmetic = false;
      cert.precision_bits = p;
      return;
    }
  }
  throw PrecisionExhaustedError(
      "lemma6_search: comparisons inconclusive at maximum precision; retry with more bits");
}

}  // namespace

int default_lemma6_precision(int n, int m) {
  const double bits = (2.0 * m + 2.0) * std::log2(static_cast<double>(std::max(2, n)));
  return std::max(64, static_cast<int>(std::ceil(bits)) + 32);
}

std::vector<EvalPoint> lemma6_candidates(int n, int m, const ChannelParam& ch) {
  if (n < 1 || m < 0) throw std::invalid_argument("lemma6_candidates: bad arguments");
  const int D = 2 * m + 2;
  const double q = ch.q();
  std::vector<EvalPoint> out;
  out.reserve(static_cast<std::size_t>(D));
  for (int j = 1; j <= D; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / D;
    const std::complex<double> z(1.0 + std::cos(angle) / (static_cast<double>(n) * n),
                                 std::sin(angle) / (static_cast<double>(n) * n));
    EvalPoint pt;
    pt.z = z;
    pt.channel_factor = std::pow(std::abs((z - q) / (1.0 - q)), n);
    pt.within_channel_budget = pt.channel_factor <= 2.0;
    out.push_back(pt);
  }
  return out;
}

Certificate lemma6_search(const IndicatorVector& u, const IndicatorVector& v, int m,
                          const ChannelParam& ch, int precision_bits) {
  if (u.length() != v.length()) {
    throw std::invalid_argument("lemma6_search: indicator length mismatch");
  }
  if (m < 0) throw std::invalid_argument("lemma6_search: m must be nonnegative");
  const int n = u.length();
  const IntPolynomial f = IntPolynomial::from_indicator(u) - IntPolynomial::from_indicator(v);
  if (f.is_zero()) {
    throw std::invalid_argument("lemma6_search: u == v, no separating power exists");
  }
  const int order = divisibility_order(f, m + 1);
  if (order != m) {
    throw std::invalid_argument(
        "lemma6_search: m is not the exact multiplicity of the root at z = 1");
  }

  Certificate cert;
  cert.separating_power = m;
  cert.divisibility_order = order;
  cert.quotient = deflate(f, m);
  const int D = 2 * m + 2;
  cert.candidate_count = D;

  if (D == 2 || D == 4) {
    search_exact(f, n, m, D, ch, cert);
  } else {
    const int base = precision_bits > 0 ? precision_bits : default_lemma6_precision(n, m);
    search_float(f, n, m, D, ch, std::max(64, base), cert);
  }
  return cert;
}

}  // namespace tracedist
