#pragma once

#include <cstdint>
#include <span>

#include "tracedist/bitstring.hpp"

namespace tracedist {

/// Minimal deletion/insertion counts transforming y into x, derived from the
/// longest common subsequence: deletions = |y| - lcs, insertions = |x| - lcs.
/// Substitutions are not an edit operation here (one substitution costs one
/// deletion plus one insertion).
struct EditDistanceReport {
  int deletions_needed = 0;
  int insertions_needed = 0;
  int lcs_length = 0;
};

int lcs_length(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Report for transforming y into x.
EditDistanceReport edit_report(const BitString& x, const BitString& y);
EditDistanceReport edit_report(const IndicatorVector& x, const IndicatorVector& y);

/// True iff x can be obtained from y by at most k deletions and at most k
/// insertions. For |x| == |y| this is symmetric in (x, y).
bool edit_ball_membership(const BitString& x, const BitString& y, int k);
bool edit_ball_membership(const BitString& x, const BitString& y, int k,
                          EditDistanceReport& report);

}  // namespace tracedist
