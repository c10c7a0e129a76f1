#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "tracedist/bitstring.hpp"
#include "tracedist/exact_arith.hpp"
#include "tracedist/rng.hpp"

namespace tracedist {

/// Per-bit i.i.d. deletion probability, 0 <= q < 1. When constructed from a
/// fraction the exact rational is carried along so that the enumeration
/// oracles can run in exact arithmetic.
class ChannelParam {
 public:
  ChannelParam() = default;

  static ChannelParam from_double(double q);
  static ChannelParam from_fraction(const Rational& q);
  /// Accepts a decimal ("0.25") or an exact fraction ("1/4"). Fractions keep
  /// exact arithmetic available downstream.
  static ChannelParam parse(std::string_view text);

  double q() const { return q_; }
  bool is_exact() const { return q_exact_.has_value(); }
  const Rational& exact_q() const;

 private:
  double q_ = 0.0;
  std::optional<Rational> q_exact_ = Rational(0);
};

/// Output of the deletion channel together with the input length, so that
/// position statistics know the source size.
struct Trace {
  BitString bits;
  int source_length = 0;
};

/// Passes x through the deletion channel: each bit is kept independently with
/// probability 1-q, order preserved.
Trace transmit(const BitString& x, const ChannelParam& ch, SplitMix64& rng);
Trace transmit(const BitString& x, const ChannelParam& ch, std::uint64_t seed);

/// Batch trace file format: one JSON header line {"n":..,"q":..,"seed":..,"N":..}
/// followed by N newline-delimited ASCII traces (an empty trace is an empty
/// line). Samples use per-index derived seeds, so the output is independent
/// of how the work is scheduled.
void write_trace_batch(std::ostream& out, const BitString& x, const ChannelParam& ch,
                       std::uint64_t seed, long long count);

}  // namespace tracedist
