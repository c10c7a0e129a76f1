#include "tracedist/mbs_identity.hpp"

#include <stdexcept>
#include <vector>

#include "tracedist/multibit_poly.hpp"
#include "tracedist/trace_oracle.hpp"

namespace tracedist {

namespace {

std::complex<double> to_std(const BigComplex& c) { return {c.real_d(), c.imag_d()}; }

}  // namespace

IdentityCheckResult verify_mbs_identity(const BitString& x, const BitString& w,
                                        std::span<const std::complex<double>> zs,
                                        const ChannelParam& ch, int n_max_guard,
                                        int precision_bits, double tolerance) {
  if (n_max_guard > kMaxEnumerationLength) n_max_guard = kMaxEnumerationLength;
  if (x.length() > n_max_guard) {
    throw std::invalid_argument("verify_mbs_identity: length guard exceeded");
  }
  const int l = w.length();
  if (l < 1 || static_cast<int>(zs.size()) != l) {
    throw std::invalid_argument("verify_mbs_identity: |w| must equal the number of z values");
  }
  const int prec = precision_bits;

  const BigFloat q = ch.is_exact() ? BigFloat::from_rational(ch.exact_q(), prec)
                                   : BigFloat(ch.q(), prec);
  const BigFloat one(1.0, prec);
  const BigFloat keep = one - q;

  // theta_j = (z_j - q) / (1 - q)
  std::vector<BigComplex> z_hp;
  std::vector<BigComplex> theta;
  z_hp.reserve(zs.size());
  theta.reserve(zs.size());
  for (const auto& z : zs) {
    BigComplex zz(z.real(), z.imag(), prec);
    theta.push_back(BigComplex((zz.re - q) / keep, zz.im / keep));
    z_hp.push_back(std::move(zz));
  }

  // Expectation side: sum over the full trace distribution of the tuple sum,
  // scaled by (1-q)^(-l).
  BigComplex expectation(prec);
  auto accumulate = [&](const std::string& trace_text, const BigFloat& prob) {
    const BitString t = BitString::parse(trace_text);
    if (t.length() < l) return;  // no tuple fits; contributes nothing
    const BigComplex g =
        multibit_generating_function<BigComplex>(t, w, std::span<const BigComplex>(theta));
    expectation += g * prob;
  };
  if (ch.is_exact()) {
    for (const auto& [text, prob] : exact_trace_distribution_exact(x, ch)) {
      accumulate(text, BigFloat::from_rational(prob, prec));
    }
  } else {
    for (const auto& [text, prob] : exact_trace_distribution(x, ch)) {
      accumulate(text, BigFloat(prob, prec));
    }
  }
  BigFloat scale = one;
  for (int j = 0; j < l; ++j) scale /= keep;
  expectation = expectation * scale;

  // Polynomial side, directly from the source string.
  const BigComplex poly =
      multibit_generating_function<BigComplex>(x, w, std::span<const BigComplex>(z_hp));

  IdentityCheckResult out;
  out.expectation_side = to_std(expectation);
  out.polynomial_side = to_std(poly);
  out.residual = (expectation - poly).abs().to_double();
  out.residual_printed = (expectation * theta[0] - poly * z_hp[0]).abs().to_double();
  if (out.residual <= tolerance) {
    out.matched = "calibrated";
  } else if (out.residual_printed <= tolerance) {
    out.matched = "printed";
  } else {
    out.matched = "none";
  }
  return out;
}

}  // namespace tracedist
