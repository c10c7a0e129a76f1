#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tracedist/channel.hpp"
#include "tracedist/plan.hpp"

namespace tracedist {

struct ExperimentConfig {
  int n = 30;
  int k = 1;
  ChannelParam channel;
  double delta = 0.05;
  int trials = 100;
  std::uint64_t seed = 1;
  std::optional<long long> sample_size_override;
  FamilyMode family = FamilyMode::kWindows;
  long long budget = 20000;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

/// Aggregate over all decisions: each trial tests traces-from-x against the
/// plan and then the mirrored traces-from-y case, so decisions = 2 * trials.
struct ExperimentResult {
  long long decisions = 0;
  long long errors = 0;
  double error_rate = 0.0;
  double mean_gap = 0.0;          // mean plan gap over trials
  double mean_sample_size = 0.0;  // mean N over trials
  double wall_seconds = 0.0;
  ExperimentConfig config;
};

/// Monte Carlo harness: per trial, draws a fresh (x, y) pair with x in the
/// radius-k edit ball of y (x != y), builds the plan, generates N traces from
/// x and decides, then repeats with traces from y. Deterministic given the
/// seed for any thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepRow {
  int n = 0;
  int k = 0;
  double q = 0.0;
  double gap = 0.0;
  double sample_size = 0.0;
  double error_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Grid sweep over (n, k, q); per-point seeds derive from the base config
/// seed and the grid index.
std::vector<SweepRow> scaling_sweep(const std::vector<int>& ns, const std::vector<int>& ks,
                                    const std::vector<ChannelParam>& qs,
                                    const ExperimentConfig& base);

struct SlopeFit {
  int k = 0;
  double slope = 0.0;  // d log N / d log n
  int points = 0;
};

/// Least-squares slope of log N against log n for each k (needs >= 2 distinct
/// n per k; rows with fewer points are skipped).
std::vector<SlopeFit> fit_sample_size_slopes(const std::vector<SweepRow>& rows);

}  // namespace tracedist
