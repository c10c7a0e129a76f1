#include "tracedist/trace_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace tracedist {

template <typename Prob>
std::map<std::string, Prob> exact_trace_distribution(const BitString& x, const Prob& q) {
  const int n = x.length();
  if (n > kMaxEnumerationLength) {
    throw std::invalid_argument("exact_trace_distribution: length guard exceeded");
  }
  const Prob keep = Prob(1) - q;
  // q^d * keep^(n-d), indexed by deletion count.
  std::vector<Prob> weight(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    Prob w(1);
    for (int i = 0; i < d; ++i) w *= q;
    for (int i = d; i < n; ++i) w *= keep;
    weight[static_cast<std::size_t>(d)] = w;
  }

  std::map<std::string, Prob> dist;
  const std::uint64_t patterns = std::uint64_t{1} << n;
  std::string buf;
  buf.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    buf.clear();
    int deleted = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        ++deleted;
      } else {
        buf.push_back(x.bits()[static_cast<std::size_t>(i)] ? '1' : '0');
      }
    }
    auto [it, inserted] = dist.emplace(buf, weight[static_cast<std::size_t>(deleted)]);
    if (!inserted) it->second += weight[static_cast<std::size_t>(deleted)];
  }
  return dist;
}

template <typename Prob>
Prob exact_statistic_expectation(const BitString& x, const StatisticSpec& spec, const Prob& q) {
  spec.validate();
  const int n = x.length();
  const int target = spec.last_index();
  if (target > n) return Prob(0);

  // required[t] = bit the trace must carry at position t, or -1 if free.
  std::vector<int> required(static_cast<std::size_t>(target) + 1, -1);
  for (int j = 0; j < spec.arity(); ++j) {
    required[static_cast<std::size_t>(spec.indices[static_cast<std::size_t>(j)])] =
        spec.pattern.bit(j + 1);
  }

  const Prob keep = Prob(1) - q;
  // dp[t], t < target: probability that t bits survived so far and every
  // constrained position <= t matched. dp[target] is absorbing.
  std::vector<Prob> dp(static_cast<std::size_t>(target) + 1, Prob(0));
  dp[0] = Prob(1);
  for (int pos = 1; pos <= n; ++pos) {
    const int b = x.bit(pos);
    const int hi = std::min(target - 1, pos - 1);
    for (int t = hi; t >= 0; --t) {
      const Prob& cur = dp[static_cast<std::size_t>(t)];
      if (cur == Prob(0)) continue;
      const int need = required[static_cast<std::size_t>(t) + 1];
      if (need < 0 || need == b) {
        dp[static_cast<std::size_t>(t) + 1] += cur * keep;
      }
      dp[static_cast<std::size_t>(t)] = cur * q;
    }
  }
  return dp[static_cast<std::size_t>(target)];
}

template std::map<std::string, double> exact_trace_distribution<double>(const BitString&,
                                                                        const double&);
template std::map<std::string, Rational> exact_trace_distribution<Rational>(const BitString&,
                                                                            const Rational&);
template double exact_statistic_expectation<double>(const BitString&, const StatisticSpec&,
                                                    const double&);
template Rational exact_statistic_expectation<Rational>(const BitString&, const StatisticSpec&,
                                                        const Rational&);

double exact_statistic_expectation(const BitString& x, const StatisticSpec& spec,
                                   const ChannelParam& ch) {
  return exact_statistic_expectation<double>(x, spec, ch.q());
}

Rational exact_statistic_expectation_exact(const BitString& x, const StatisticSpec& spec,
                                           const ChannelParam& ch) {
  return exact_statistic_expectation<Rational>(x, spec, ch.exact_q());
}

std::map<std::string, double> exact_trace_distribution(const BitString& x,
                                                       const ChannelParam& ch) {
  return exact_trace_distribution<double>(x, ch.q());
}

std::map<std::string, Rational> exact_trace_distribution_exact(const BitString& x,
                                                               const ChannelParam& ch) {
  return exact_trace_distribution<Rational>(x, ch.exact_q());
}

}  // namespace tracedist
