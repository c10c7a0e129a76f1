#include "tracedist/power_sums.hpp"

#include <stdexcept>

namespace tracedist {

namespace {

template <typename Seq>
BigInt power_sum_impl(const Seq& entries, int m) {
  if (m < 0) throw std::invalid_argument("power_sum: m must be nonnegative");
  BigInt total = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i]) continue;
    total += pow_int(BigInt(i + 1), m);
  }
  return total;
}

template <typename Seq>
BigInt prefix_power_sum_impl(const Seq& entries, int m) {
  if (m < 0) throw std::invalid_argument("prefix_power_sum: m must be nonnegative");
  BigInt total = 0;
  BigInt running = 0;  // sum_{j<=i} j^m
  for (std::size_t i = 0; i < entries.size(); ++i) {
    running += pow_int(BigInt(i + 1), m);
    if (entries[i]) total += running;
  }
  return total;
}

}  // namespace

BigInt power_sum(const IndicatorVector& v, int m) { return power_sum_impl(v.entries, m); }
BigInt power_sum(const BitString& v, int m) { return power_sum_impl(v.bits(), m); }

BigInt prefix_power_sum(const IndicatorVector& v, int m) {
  return prefix_power_sum_impl(v.entries, m);
}
BigInt prefix_power_sum(const BitString& v, int m) { return prefix_power_sum_impl(v.bits(), m); }

std::optional<int> find_separating_power(const IndicatorVector& u, const IndicatorVector& v,
                                         int m_max) {
  if (u.length() != v.length()) {
    throw std::invalid_argument("find_separating_power: length mismatch");
  }
  if (m_max < 1) throw std::invalid_argument("find_separating_power: m_max must be positive");
  for (int m = 1; m <= m_max; ++m) {
    if (power_sum(u, m) != power_sum(v, m)) return m;
  }
  return std::nullopt;
}

std::optional<int> smallest_separating_power(const IndicatorVector& u, const IndicatorVector& v,
                                             int m_max) {
  if (u.length() != v.length()) {
    throw std::invalid_argument("smallest_separating_power: length mismatch");
  }
  if (power_sum(u, 0) != power_sum(v, 0)) return 0;
  return find_separating_power(u, v, m_max);
}

}  // namespace tracedist
