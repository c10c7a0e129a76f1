#pragma once

#include <map>
#include <string>

#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/exact_arith.hpp"
#include "tracedist/statistic.hpp"

namespace tracedist {

/// Hard cap for the 2^n deletion-pattern enumeration.
inline constexpr int kMaxEnumerationLength = 20;

/// Full distribution of the deletion channel output, by brute force over all
/// 2^n deletion patterns: probability of trace t is the sum of
/// q^(#deleted) (1-q)^(#kept) over patterns producing t. Keys are the ASCII
/// trace strings. Requires |x| <= kMaxEnumerationLength.
template <typename Prob>
std::map<std::string, Prob> exact_trace_distribution(const BitString& x, const Prob& q);

/// Exact probability that the trace has length >= i_l and its bits at the
/// spec's positions equal the pattern. Dynamic program over (source position,
/// surviving prefix length), O(n * i_l); positions beyond the trace length
/// contribute nothing, so a spec with i_l > |x| has probability zero.
template <typename Prob>
Prob exact_statistic_expectation(const BitString& x, const StatisticSpec& spec, const Prob& q);

/// Dispatch on the channel parameter: double arithmetic always works; the
/// Rational overloads require an exact q.
double exact_statistic_expectation(const BitString& x, const StatisticSpec& spec,
                                   const ChannelParam& ch);
Rational exact_statistic_expectation_exact(const BitString& x, const StatisticSpec& spec,
                                           const ChannelParam& ch);
std::map<std::string, double> exact_trace_distribution(const BitString& x,
                                                       const ChannelParam& ch);
std::map<std::string, Rational> exact_trace_distribution_exact(const BitString& x,
                                                               const ChannelParam& ch);

}  // namespace tracedist
