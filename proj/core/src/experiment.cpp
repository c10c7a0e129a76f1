#include "tracedist/experiment.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "tracedist/sampling.hpp"
#include "tracedist/statistic.hpp"

namespace tracedist {

void ExperimentConfig::validate() const {
  if (n < 2) throw std::invalid_argument("ExperimentConfig: n must be >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("ExperimentConfig: k must be in [1, n]");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("ExperimentConfig: delta must be in (0,1)");
  }
  if (trials < 1) throw std::invalid_argument("ExperimentConfig: trials must be positive");
  if (sample_size_override && *sample_size_override < 1) {
    throw std::invalid_argument("ExperimentConfig: sample size override must be positive");
  }
  if (budget < 1) throw std::invalid_argument("ExperimentConfig: budget must be positive");
}

namespace {

constexpr int kResampleLimit = 64;

struct TrialOutcome {
  int errors = 0;  // 0..2
  double gap = 0.0;
  long long sample_size = 0;
};

TrialOutcome run_trial(const ExperimentConfig& cfg, std::uint64_t trial_seed) {
  SplitMix64 rng(trial_seed);
  BitString x, y;
  for (int attempt = 0;; ++attempt) {
    y = random_bitstring(cfg.n, rng);
    x = sample_from_edit_ball(y, cfg.k, rng);
    if (!(x == y)) break;
    if (attempt + 1 >= kResampleLimit) {
      throw std::runtime_error("run_experiment: could not sample a distinct pair");
    }
  }

  const PipelinePlan plan = build_plan(x, y, cfg.k, cfg.channel, cfg.delta, cfg.family,
                                       cfg.budget, SplitMix64::derive(trial_seed, 0x9a71));
  const long long N = cfg.sample_size_override.value_or(plan.sample_size);

  TrialOutcome out;
  out.gap = plan.gap;
  out.sample_size = N;

  const long long hits_x = count_satisfying_samples(x, cfg.channel, plan.chosen, N,
                                                    SplitMix64::derive(trial_seed, 1), cfg.threads);
  if (decide_value(static_cast<double>(hits_x) / static_cast<double>(N), plan) != Verdict::kX) {
    ++out.errors;
  }
  const long long hits_y = count_satisfying_samples(y, cfg.channel, plan.chosen, N,
                                                    SplitMix64::derive(trial_seed, 2), cfg.threads);
  if (decide_value(static_cast<double>(hits_y) / static_cast<double>(N), plan) != Verdict::kY) {
    ++out.errors;
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  ExperimentResult result;
  result.config = config;
  double gap_sum = 0.0;
  double n_sum = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    const TrialOutcome outcome =
        run_trial(config, SplitMix64::derive(config.seed, static_cast<std::uint64_t>(t)));
    result.errors += outcome.errors;
    gap_sum += outcome.gap;
    n_sum += static_cast<double>(outcome.sample_size);
  }
  result.decisions = 2LL * config.trials;
  result.error_rate = static_cast<double>(result.errors) / static_cast<double>(result.decisions);
  result.mean_gap = gap_sum / config.trials;
  result.mean_sample_size = n_sum / config.trials;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SweepRow> scaling_sweep(const std::vector<int>& ns, const std::vector<int>& ks,
                                    const std::vector<ChannelParam>& qs,
                                    const ExperimentConfig& base) {
  if (ns.empty() || ks.empty() || qs.empty()) {
    throw std::invalid_argument("scaling_sweep: empty range");
  }
  std::vector<SweepRow> rows;
  std::uint64_t cell = 0;
  for (int k : ks) {
    for (int n : ns) {
      for (const ChannelParam& q : qs) {
        ExperimentConfig cfg = base;
        cfg.n = n;
        cfg.k = k;
        cfg.channel = q;
        cfg.seed = SplitMix64::derive(base.seed, cell++);
        const ExperimentResult res = run_experiment(cfg);
        SweepRow row;
        row.n = n;
        row.k = k;
        row.q = q.q();
        row.gap = res.mean_gap;
        row.sample_size = res.mean_sample_size;
        row.error_rate = res.error_rate;
        row.seed = cfg.seed;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::vector<SlopeFit> fit_sample_size_slopes(const std::vector<SweepRow>& rows) {
  std::map<int, std::vector<std::pair<double, double>>> by_k;
  for (const SweepRow& r : rows) {
    if (r.sample_size > 0.0 && r.n > 1) {
      by_k[r.k].emplace_back(std::log(static_cast<double>(r.n)), std::log(r.sample_size));
    }
  }
  std::vector<SlopeFit> fits;
  for (const auto& [k, pts] : by_k) {
    if (pts.size() < 2) continue;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [lx, ly] : pts) {
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double npts = static_cast<double>(pts.size());
    const double denom = npts * sxx - sx * sx;
    if (denom == 0.0) continue;
    fits.push_back({k, (npts * sxy - sx * sy) / denom, static_cast<int>(pts.size())});
  }
  return fits;
}

}  // namespace tracedist
