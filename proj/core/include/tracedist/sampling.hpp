#pragma once

#include <cstdint>

#include "tracedist/bitstring.hpp"
#include "tracedist/rng.hpp"

namespace tracedist {

BitString random_bitstring(int n, SplitMix64& rng);

struct EditSampleOptions {
  /// Edits are only applied at positions >= min_position, leaving the prefix
  /// [1, min_position-1] untouched. Used to generate pairs whose first
  /// difference sits deep inside the string.
  int min_position = 1;
  /// When false, the deletion and insertion counts are drawn independently,
  /// so the output length may differ from the input length.
  bool equal_length = true;
};

/// Draws x from the edit ball of y: d <= k deletions at uniform positions
/// followed by d uniform random bits inserted at uniform positions, d itself
/// uniform on {0,...,k}. With equal_length (default) |x| == |y|.
/// Deterministic given the generator state. Requires 0 <= k <= |y|.
BitString sample_from_edit_ball(const BitString& y, int k, SplitMix64& rng,
                                const EditSampleOptions& opts = {});

/// Seed-taking convenience wrapper.
BitString sample_from_edit_ball(const BitString& y, int k, std::uint64_t seed);

}  // namespace tracedist
