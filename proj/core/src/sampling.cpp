#include "tracedist/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tracedist {

BitString random_bitstring(int n, SplitMix64& rng) {
  if (n < 0) throw std::invalid_argument("random_bitstring: negative length");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
  return BitString(std::move(bits));
}

namespace {

// d distinct positions in [lo, hi], ascending.
std::vector<int> sample_positions(int lo, int hi, int d, SplitMix64& rng) {
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int p = lo; p <= hi; ++p) pool.push_back(p);
  // Partial Fisher-Yates.
  for (int i = 0; i < d; ++i) {
    const std::size_t j = i + rng.next_below(pool.size() - static_cast<std::size_t>(i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(d));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

BitString sample_from_edit_ball(const BitString& y, int k, SplitMix64& rng,
                                const EditSampleOptions& opts) {
  const int n = y.length();
  if (k < 0 || k > n) throw std::invalid_argument("sample_from_edit_ball: k out of range");
  if (opts.min_position < 1 || opts.min_position > n + 1) {
    throw std::invalid_argument("sample_from_edit_ball: min_position out of range");
  }
  const int editable = n - opts.min_position + 1;
  const int k_eff = std::min(k, editable);

  const int d_del = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k_eff) + 1));
  const int d_ins = opts.equal_length
                        ? d_del
                        : static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k_eff) + 1));

  std::vector<std::uint8_t> bits = y.bits();
  if (d_del > 0) {
    const std::vector<int> del = sample_positions(opts.min_position, n, d_del, rng);
    for (auto it = del.rbegin(); it != del.rend(); ++it) {
      bits.erase(bits.begin() + (*it - 1));
    }
  }
  for (int i = 0; i < d_ins; ++i) {
    // Slot s inserts the new bit at position s+1; slots at or after the
    // protected prefix only.
    const int lo_slot = opts.min_position - 1;
    const int hi_slot = static_cast<int>(bits.size());
    const int slot =
        lo_slot + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hi_slot - lo_slot) + 1));
    bits.insert(bits.begin() + slot, static_cast<std::uint8_t>(rng.next_bit()));
  }
  return BitString(std::move(bits));
}

BitString sample_from_edit_ball(const BitString& y, int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_from_edit_ball(y, k, rng);
}

}  // namespace tracedist
