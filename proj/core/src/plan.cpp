#include "tracedist/plan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tracedist/edit_distance.hpp"
#include "tracedist/rng.hpp"
#include "tracedist/trace_oracle.hpp"

namespace tracedist {

long long hoeffding_sample_size(double gap, double delta) {
  if (!(gap > 0.0)) throw std::invalid_argument("hoeffding_sample_size: gap must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("hoeffding_sample_size: delta must be in (0,1)");
  }
  return static_cast<long long>(std::ceil(2.0 * std::log(2.0 / delta) / (gap * gap)));
}

std::vector<StatisticSpec> window_family(const BitString& pattern, int n) {
  std::vector<StatisticSpec> out;
  for (int start = 1; start + pattern.length() - 1 <= n; ++start) {
    out.push_back(StatisticSpec::window(pattern, start));
  }
  return out;
}

namespace {

struct Scored {
  StatisticSpec spec;
  double e_x = 0.0;
  double e_y = 0.0;
  double gap = -1.0;
};

class FamilySearch {
 public:
  FamilySearch(const BitString& x, const BitString& y, const ChannelParam& ch)
      : x_(x), y_(y), ch_(ch) {}

  void consider(const StatisticSpec& spec) {
    ++evaluated_;
    const double ex = exact_statistic_expectation(x_, spec, ch_);
    const double ey = exact_statistic_expectation(y_, spec, ch_);
    const double gap = std::abs(ex - ey);
    if (gap > best_.gap) best_ = {spec, ex, ey, gap};
    if (kept_.size() < kKeepLimit) kept_.push_back(spec);
  }

  const Scored& best() const { return best_; }
  std::size_t evaluated() const { return evaluated_; }
  std::vector<StatisticSpec> take_family() {
    if (evaluated_ > kKeepLimit) return {};
    return std::move(kept_);
  }

 private:
  static constexpr std::size_t kKeepLimit = 4096;
  const BitString& x_;
  const BitString& y_;
  const ChannelParam& ch_;
  Scored best_;
  std::vector<StatisticSpec> kept_;
  std::size_t evaluated_ = 0;
};

// Strictly increasing r-tuple drawn uniformly from [1, n].
std::vector<int> random_tuple(int n, int r, SplitMix64& rng) {
  std::vector<int> picks;
  picks.reserve(static_cast<std::size_t>(r));
  // Floyd's algorithm.
  for (int j = n - r + 1; j <= n; ++j) {
    const int t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(j)));
    if (std::find(picks.begin(), picks.end(), t) == picks.end()) {
      picks.push_back(t);
    } else {
      picks.push_back(j);
    }
  }
  std::sort(picks.begin(), picks.end());
  return picks;
}

// Visits every strictly increasing r-tuple over [1, n]; stops early when the
// visitor returns false.
template <typename Visitor>
void for_each_tuple(int n, int r, Visitor&& visit) {
  std::vector<int> tuple(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) tuple[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (!visit(tuple)) return;
    int i = r - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - (r - 1 - i)) --i;
    if (i < 0) return;
    ++tuple[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

BitString substring_pattern(const BitString& s, const std::vector<int>& tuple) {
  BitString p;
  for (int idx : tuple) p.push_back(s.bit(idx));
  return p;
}

void search_main_windows(FamilySearch& search, const BitString& w, int n) {
  for (const StatisticSpec& spec : window_family(w, n)) search.consider(spec);
}

void search_main_sampled(FamilySearch& search, const BitString& w, int n, long long budget,
                         SplitMix64& rng) {
  const int r = w.length();
  if (r > n) return;
  for (long long i = 0; i < budget; ++i) {
    StatisticSpec spec;
    spec.pattern = w;
    spec.indices = random_tuple(n, r, rng);
    search.consider(spec);
  }
}

// Short-pattern window statistics; the patterns come from the two source
// strings themselves.
void search_fallback_windows(FamilySearch& search, const BitString& x, const BitString& y) {
  const int n = x.length();
  const int max_len = std::min(4, n);
  for (int len = 1; len <= max_len; ++len) {
    for (int start = 1; start + len - 1 <= n; ++start) {
      const BitString px = x.substring(start, start + len - 1);
      const BitString py = y.substring(start, start + len - 1);
      search.consider(StatisticSpec::window(px, start));
      if (!(py == px)) search.consider(StatisticSpec::window(py, start));
    }
  }
}

void search_fallback_sampled(FamilySearch& search, const BitString& x, const BitString& y,
                             long long budget, SplitMix64& rng) {
  const int n = x.length();
  for (long long i = 0; i < budget; ++i) {
    const int r = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(std::min(4, n))));
    StatisticSpec spec;
    spec.indices = random_tuple(n, r, rng);
    spec.pattern = substring_pattern(x, spec.indices);
    search.consider(spec);
    StatisticSpec spec_y;
    spec_y.indices = spec.indices;
    spec_y.pattern = substring_pattern(y, spec.indices);
    if (!(spec_y.pattern == spec.pattern)) search.consider(spec_y);
  }
}

// Every tuple of arity <= max_arity with every pattern, budget-capped.
void search_exhaustive(FamilySearch& search, int n, int max_arity, long long budget) {
  long long left = budget;
  for (int r = 1; r <= max_arity && left > 0; ++r) {
    const std::uint64_t patterns = std::uint64_t{1} << r;
    for_each_tuple(n, r, [&](const std::vector<int>& tuple) {
      for (std::uint64_t bits = 0; bits < patterns; ++bits) {
        BitString pattern;
        for (int j = 0; j < r; ++j) pattern.push_back(static_cast<int>((bits >> j) & 1));
        StatisticSpec spec;
        spec.pattern = std::move(pattern);
        spec.indices = tuple;
        search.consider(spec);
        if (--left <= 0) return false;
      }
      return true;
    });
  }
}

}  // namespace

PipelinePlan build_plan(const BitString& x, const BitString& y, int k, const ChannelParam& ch,
                        double delta, FamilyMode family, long long budget, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("build_plan: k must be positive");
  if (x.length() != y.length()) {
    throw std::invalid_argument("build_plan: hypotheses must have equal length");
  }
  const auto t0 = first_diff_index(x, y);
  if (!t0) throw std::invalid_argument("build_plan: x == y");
  if (!edit_ball_membership(x, y, k)) {
    throw std::invalid_argument("build_plan: x is not within the radius-k edit ball of y");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("build_plan: delta must be in (0,1)");
  }

  const int n = x.length();
  PipelinePlan plan;
  plan.t0 = *t0;
  plan.delta = delta;

  FamilySearch search(x, y, ch);
  SplitMix64 rng(seed);

  if (*t0 >= 12 * k && 12 * k <= n) {
    plan.mode = PlanMode::kMain;
    plan.w = extend_to_nonperiodic(x.substring(*t0 - 12 * k + 1, *t0 - 1));
    switch (family) {
      case FamilyMode::kWindows:
        search_main_windows(search, plan.w, n);
        break;
      case FamilyMode::kSampled:
        search_main_windows(search, plan.w, n);
        search_main_sampled(search, plan.w, n, budget, rng);
        break;
      case FamilyMode::kExhaustive:
        throw std::invalid_argument(
            "build_plan: exhaustive tuple search is not feasible for the 12k-bit pattern; "
            "use windows or sampled");
    }
    // The window family should always separate; random tuples are a safety
    // net for the degenerate case.
    if (!(search.best().gap > 0.0) && family == FamilyMode::kWindows) {
      search_main_sampled(search, plan.w, n, budget, rng);
    }
  } else {
    plan.mode = PlanMode::kSmallT0Fallback;
    switch (family) {
      case FamilyMode::kWindows:
        search_fallback_windows(search, x, y);
        break;
      case FamilyMode::kSampled:
        search_fallback_windows(search, x, y);
        search_fallback_sampled(search, x, y, budget, rng);
        break;
      case FamilyMode::kExhaustive:
        search_fallback_windows(search, x, y);
        search_exhaustive(search, n, std::min(3, n), budget);
        break;
    }
    if (!(search.best().gap > 0.0) && family == FamilyMode::kWindows) {
      search_fallback_sampled(search, x, y, budget, rng);
    }
  }

  const Scored& best = search.best();
  if (!(best.gap > 0.0)) {
    throw std::runtime_error("build_plan: no statistic with a positive expectation gap found");
  }
  plan.family_size = search.evaluated();
  plan.family = search.take_family();
  plan.chosen = best.spec;
  if (plan.mode == PlanMode::kSmallT0Fallback) plan.w = best.spec.pattern;
  plan.e_x = best.e_x;
  plan.e_y = best.e_y;
  plan.gap = best.gap;
  plan.sample_size = hoeffding_sample_size(best.gap, delta);
  return plan;
}

Verdict decide_value(double empirical, const PipelinePlan& plan) {
  return std::abs(empirical - plan.e_x) <= std::abs(empirical - plan.e_y) ? Verdict::kX
                                                                          : Verdict::kY;
}

Verdict decide(const std::vector<Trace>& traces, const PipelinePlan& plan) {
  return decide_value(empirical_statistic(traces, plan.chosen), plan);
}

BestStatistic exhaustive_best_statistic(const BitString& x, const BitString& y,
                                        const ChannelParam& ch, int max_arity, long long budget) {
  if (x.length() != y.length()) {
    throw std::invalid_argument("exhaustive_best_statistic: length mismatch");
  }
  FamilySearch search(x, y, ch);
  search_exhaustive(search, x.length(), max_arity, budget);
  const Scored& best = search.best();
  if (best.gap < 0.0) throw std::runtime_error("exhaustive_best_statistic: nothing evaluated");
  return {best.spec, best.e_x, best.e_y, best.gap};
}

}  // namespace tracedist
