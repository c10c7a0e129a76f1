#pragma once

#include <cstdint>
#include <vector>

#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/rng.hpp"

namespace tracedist {

/// One multi-bit statistic: the event that the trace has length >= i_l and
/// its bits at the listed positions equal the pattern. Indices are 1-based
/// and strictly increasing; pattern length equals the index count.
struct StatisticSpec {
  BitString pattern;
  std::vector<int> indices;

  int arity() const { return static_cast<int>(indices.size()); }
  int last_index() const { return indices.empty() ? 0 : indices.back(); }

  /// Throws std::invalid_argument when malformed (or when i_l > n, if a
  /// positive source length is supplied).
  void validate(int source_length = 0) const;

  /// Event evaluated on a realized trace; traces shorter than i_l never
  /// satisfy the spec.
  bool satisfied_by(const BitString& trace_bits) const;

  /// Consecutive window (start, start+1, ..., start+|pattern|-1).
  static StatisticSpec window(const BitString& pattern, int start);

  friend bool operator==(const StatisticSpec&, const StatisticSpec&) = default;
};

/// Fraction of traces satisfying the spec. Throws on an empty list.
double empirical_statistic(const std::vector<Trace>& traces, const StatisticSpec& spec);

/// Draws one trace of x and evaluates the spec on it without materializing
/// the trace. The outcome matches satisfied_by(transmit(x, ch, rng).bits)
/// for a generator started in the same state; fewer draws may be consumed
/// because the scan stops once the outcome is determined.
bool sample_statistic(const BitString& x, const ChannelParam& ch, const StatisticSpec& spec,
                      SplitMix64& rng);

/// Number of satisfying traces among `count` samples with per-sample derived
/// seeds (seed, sample index). The result is identical for any thread count.
long long count_satisfying_samples(const BitString& x, const ChannelParam& ch,
                                   const StatisticSpec& spec, long long count,
                                   std::uint64_t seed, int threads = 0);

}  // namespace tracedist
