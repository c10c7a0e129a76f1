#pragma once

#include <complex>
#include <span>
#include <string>

#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"

namespace tracedist {

/// Outcome of checking the multi-bit statistics identity on one instance.
///
/// The expectation side is computed from the exact trace distribution
/// (enumeration over all deletion patterns); the polynomial side directly
/// from the source string. Both are evaluated under two indexing
/// conventions:
///   - "calibrated": the first tuple factor uses exponent i_1 - 1 on the
///     statistics side and j_1 - 1 on the polynomial side. This is the form
///     the enumeration oracle confirms exactly.
///   - "printed": both first factors use the unshifted exponents i_1 / j_1.
///     This form does not balance (already at single-bit instances the two
///     sides disagree by a factor (z-q)/((1-q)z)).
struct IdentityCheckResult {
  double residual = 0.0;          // calibrated convention
  double residual_printed = 0.0;  // unshifted convention
  std::string matched;            // "calibrated", "printed" or "none"
  std::complex<double> expectation_side;  // calibrated values
  std::complex<double> polynomial_side;
};

/// Checks the identity for pattern w and evaluation points z_1..z_l on all
/// traces of x. Requires |x| <= n_max_guard (enumeration cost 2^n) and
/// |w| = |zs| >= 1. Exact rational probabilities are used when the channel
/// parameter is exact; all complex arithmetic runs at precision_bits.
IdentityCheckResult verify_mbs_identity(const BitString& x, const BitString& w,
                                        std::span<const std::complex<double>> zs,
                                        const ChannelParam& ch, int n_max_guard = 20,
                                        int precision_bits = 128, double tolerance = 1e-12);

}  // namespace tracedist
