#include "tracedist/statistic.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace tracedist {

void StatisticSpec::validate(int source_length) const {
  if (pattern.length() < 1) throw std::invalid_argument("StatisticSpec: empty pattern");
  if (static_cast<int>(indices.size()) != pattern.length()) {
    throw std::invalid_argument("StatisticSpec: pattern length must equal index count");
  }
  int prev = 0;
  for (int idx : indices) {
    if (idx <= prev) throw std::invalid_argument("StatisticSpec: indices must be strictly increasing");
    prev = idx;
  }
  if (source_length > 0 && last_index() > source_length) {
    throw std::invalid_argument("StatisticSpec: last index exceeds source length");
  }
}

bool StatisticSpec::satisfied_by(const BitString& trace_bits) const {
  if (last_index() > trace_bits.length()) return false;
  for (int j = 0; j < arity(); ++j) {
    if (trace_bits.bit(indices[static_cast<std::size_t>(j)]) != pattern.bit(j + 1)) return false;
  }
  return true;
}

StatisticSpec StatisticSpec::window(const BitString& pattern, int start) {
  StatisticSpec spec;
  spec.pattern = pattern;
  spec.indices.resize(static_cast<std::size_t>(pattern.length()));
  for (int j = 0; j < pattern.length(); ++j) spec.indices[static_cast<std::size_t>(j)] = start + j;
  return spec;
}

double empirical_statistic(const std::vector<Trace>& traces, const StatisticSpec& spec) {
  if (traces.empty()) throw std::invalid_argument("empirical_statistic: empty trace list");
  long long hits = 0;
  for (const Trace& t : traces) {
    if (spec.satisfied_by(t.bits)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(traces.size());
}

bool sample_statistic(const BitString& x, const ChannelParam& ch, const StatisticSpec& spec,
                      SplitMix64& rng) {
  const double q = ch.q();
  const auto& bits = x.bits();
  const int arity = spec.arity();
  int trace_pos = 0;   // kept bits so far
  int next_check = 0;  // next constrained index to verify
  for (std::uint8_t b : bits) {
    if (rng.next_double() < q) continue;
    ++trace_pos;
    if (trace_pos == spec.indices[static_cast<std::size_t>(next_check)]) {
      if (b != spec.pattern.bit(next_check + 1)) return false;
      ++next_check;
      if (next_check == arity) return true;
    }
  }
  return false;  // trace ended before i_l
}

long long count_satisfying_samples(const BitString& x, const ChannelParam& ch,
                                   const StatisticSpec& spec, long long count,
                                   std::uint64_t seed, int threads) {
  if (count <= 0) throw std::invalid_argument("count_satisfying_samples: count must be positive");
  spec.validate();
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = static_cast<int>(std::min<long long>(threads, count));

  auto worker = [&](long long lo, long long hi) {
    long long hits = 0;
    for (long long i = lo; i < hi; ++i) {
      SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(i)));
      if (sample_statistic(x, ch, spec, rng)) ++hits;
    }
    return hits;
  };

  if (threads == 1) return worker(0, count);

  std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const long long chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long long lo = t * chunk;
    const long long hi = std::min(count, lo + chunk);
    pool.emplace_back([&, t, lo, hi] { partial[static_cast<std::size_t>(t)] = worker(lo, hi); });
  }
  for (auto& th : pool) th.join();
  long long total = 0;
  for (long long h : partial) total += h;
  return total;
}

}  // namespace tracedist
