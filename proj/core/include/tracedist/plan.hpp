#pragma once

#include <cstdint>
#include <vector>

#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/statistic.hpp"

namespace tracedist {

enum class PlanMode {
  kMain,             // t0 >= 12k: pattern built around the first difference
  kSmallT0Fallback,  // t0 < 12k: exhaustive search over short statistics
};

enum class FamilyMode {
  kWindows,     // consecutive-window statistics only (default)
  kExhaustive,  // all index tuples of the pattern arity (small instances)
  kSampled,     // windows plus a budget of random index tuples
};

enum class Verdict { kX, kY };

/// Everything needed to run the two-hypothesis test: the statistic family
/// that was searched, the chosen statistic with its exact expectations under
/// both hypotheses, and the Hoeffding sample size.
struct PipelinePlan {
  PlanMode mode = PlanMode::kMain;
  int t0 = 0;
  BitString w;  // MAIN-mode pattern, |w| = 12k and non-periodic

  std::vector<StatisticSpec> family;  // populated when the family is small
  std::size_t family_size = 0;

  StatisticSpec chosen;
  double e_x = 0.0;
  double e_y = 0.0;
  double gap = 0.0;  // |e_x - e_y|, strictly positive

  double delta = 0.05;
  long long sample_size = 0;  // N >= ceil(2 ln(2/delta) / gap^2)
};

/// ceil(2 ln(2/delta) / gap^2), the two-sided Hoeffding size resolving a
/// bounded mean within gap/2 at confidence 1-delta.
long long hoeffding_sample_size(double gap, double delta);

/// All consecutive windows of the pattern over a length-n source.
std::vector<StatisticSpec> window_family(const BitString& pattern, int n);

/// Builds the test plan for distinguishing x from y. Preconditions: x != y,
/// |x| == |y|, x within the edit ball of radius k around y, k >= 1.
/// The seed only affects FamilyMode::kSampled tuple draws.
PipelinePlan build_plan(const BitString& x, const BitString& y, int k, const ChannelParam& ch,
                        double delta, FamilyMode family = FamilyMode::kWindows,
                        long long budget = 20000, std::uint64_t seed = 0x7ace5eedULL);

/// X if the empirical statistic is at least as close to e_x as to e_y
/// (midpoint ties go to X), otherwise Y.
Verdict decide_value(double empirical, const PipelinePlan& plan);
Verdict decide(const std::vector<Trace>& traces, const PipelinePlan& plan);

/// Exhaustive oracle: best statistic over every index tuple of arity
/// 1..max_arity and every pattern, by exact expectation gap. Cost grows as
/// C(n, arity) 2^arity; the budget caps the number of evaluated statistics.
struct BestStatistic {
  StatisticSpec spec;
  double e_x = 0.0;
  double e_y = 0.0;
  double gap = 0.0;
};
BestStatistic exhaustive_best_statistic(const BitString& x, const BitString& y,
                                        const ChannelParam& ch, int max_arity,
                                        long long budget = 2000000);

}  // namespace tracedist
