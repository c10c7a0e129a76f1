#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "tracedist/bigfloat.hpp"
#include "tracedist/bitstring.hpp"

namespace tracedist {

inline std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
inline std::complex<double> one_like(const std::complex<double>&) { return {1.0, 0.0}; }
inline BigComplex zero_like(const BigComplex& c) { return BigComplex(c.precision()); }
inline BigComplex one_like(const BigComplex& c) {
  return BigComplex(1.0, 0.0, c.precision());
}

/// Weighted sum over all occurrences of w at strictly increasing positions
/// j_1 < ... < j_l of s (s_{j_h} = w_h for all h):
///
///   sum  a_1^(j_1 - 1) * prod_{h=2..l} a_h^(j_h - j_{h-1} - 1)
///
/// i.e. the first factor is exponent-shifted so that a tuple starting at
/// position 1 carries weight 1. O(l * |s|) via one pass per pattern level.
template <typename Cx>
Cx multibit_generating_function(const BitString& s, const BitString& w, std::span<const Cx> zs) {
  const int l = w.length();
  if (l < 1) throw std::invalid_argument("multibit_generating_function: empty pattern");
  if (static_cast<int>(zs.size()) != l) {
    throw std::invalid_argument("multibit_generating_function: need one variable per pattern bit");
  }
  const int L = s.length();
  const Cx zero = zero_like(zs[0]);

  std::vector<Cx> level(static_cast<std::size_t>(L) + 1, zero);
  Cx power = one_like(zs[0]);  // a_1^(j-1)
  for (int j = 1; j <= L; ++j) {
    if (s.bit(j) == w.bit(1)) level[static_cast<std::size_t>(j)] = power;
    if (j < L) power = power * zs[0];
  }
  for (int h = 2; h <= l; ++h) {
    std::vector<Cx> next(static_cast<std::size_t>(L) + 1, zero);
    Cx tail = zero;  // sum_{j'<j} level[j'] a_h^(j-j'-1)
    for (int j = 1; j <= L; ++j) {
      if (s.bit(j) == w.bit(h)) next[static_cast<std::size_t>(j)] = tail;
      tail = tail * zs[static_cast<std::size_t>(h - 1)] + level[static_cast<std::size_t>(j)];
    }
    level = std::move(next);
  }
  Cx total = zero;
  for (int j = 1; j <= L; ++j) total += level[static_cast<std::size_t>(j)];
  return total;
}

/// Position-indexed form: every tuple additionally carries a factor z_1, so a
/// pattern occupying a single position j contributes z_1^j. This matches the
/// indicator-vector polynomial sum_i 1_w(s)_i z^i when z_2 = ... = z_l = 0.
template <typename Cx>
Cx multibit_f(const BitString& s, const BitString& w, std::span<const Cx> zs) {
  return zs[0] * multibit_generating_function(s, w, zs);
}

}  // namespace tracedist
