#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "tracedist/bigfloat.hpp"
#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/int_polynomial.hpp"

namespace tracedist {

/// One candidate evaluation point z = 1 + e^(2 pi i j / D) / n^2 together
/// with its channel scaling |(z-q)/(1-q)|^n.
struct EvalPoint {
  std::complex<double> z;
  double channel_factor = 0.0;
  bool within_channel_budget = false;  // channel_factor <= 2
};

/// Separation certificate for a difference polynomial f built from two
/// indicator vectors. The witness is the candidate point maximizing |f|;
/// the certificate is VALID when |f(z)| clears the bound 1/(n^(2m) (2m+2))
/// and the channel factor stays within 2. Certificates for small n may
/// legitimately come back invalid; that is reported, not thrown.
struct Certificate {
  int separating_power = 0;   // m
  int divisibility_order = 0; // multiplicity of the root at 1; equals m
  IntPolynomial quotient;     // f / (z-1)^m, q(1) != 0
  std::complex<double> witness_z;
  BigFloat witness_value;       // |f(witness_z)|
  BigFloat bound;               // 1/(n^(2m) (2m+2))
  BigFloat channel_factor;      // |(witness_z - q)/(1-q)|^n
  BigFloat avg_over_candidates; // |sum_j quotient(1 + u_j/n^2)| over all D points
  bool avg_at_least_one = false;
  bool valid = false;
  bool exact_arithmetic = false;  // Gaussian-rational path (D in {2,4})
  int precision_bits = 0;
  int candidate_count = 0;  // D = 2m+2
};

/// Raised when comparisons against the bound remain inconclusive after the
/// maximum precision escalation; retry explicitly with more bits.
class PrecisionExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default working precision: max(64, ceil((2m+2) log2 n) + 32) bits.
int default_lemma6_precision(int n, int m);

/// The D = 2m+2 candidate points for strings of length n, double precision
/// view (for reporting; the search itself uses exact or high-precision
/// arithmetic).
std::vector<EvalPoint> lemma6_candidates(int n, int m, const ChannelParam& ch);

/// Runs the circle search for the difference of the two indicator-vector
/// polynomials. Requires |u| == |v|, u != v, and m equal to the exact
/// multiplicity of the root of poly(u)-poly(v) at z = 1 (the smallest
/// separating power). precision_bits = 0 selects the default; comparisons
/// escalate precision automatically when inconclusive.
Certificate lemma6_search(const IndicatorVector& u, const IndicatorVector& v, int m,
                          const ChannelParam& ch, int precision_bits = 0);

}  // namespace tracedist
