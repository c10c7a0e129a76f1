#pragma once

#include <complex>
#include <vector>

#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/circle_search.hpp"

namespace tracedist {

/// Result of the multi-variate gap search: z_1 is the circle-search witness,
/// the remaining variables share one real value chosen from a grid on
/// [max(2q-1,0), 1]. The gap is measured, not bounded; the underlying
/// analytic inequality has unspecified constants, so no lower bound is
/// asserted.
struct GapSearchResult {
  std::vector<std::complex<double>> zs;  // (z_1, z, ..., z), length |w|
  double z_common = 1.0;
  double gap = 0.0;
  Certificate certificate;
};

/// Grid-searches the common value of z_2..z_l maximizing
/// |f_x,w(z_1, z, ..., z) - f_y,w(z_1, z, ..., z)|. The grid has grid_size
/// points and always includes the z = 1 endpoint. Requires the lemma6
/// preconditions on (indicator(x,w), indicator(y,w), m).
GapSearchResult lemma7_gap_search(const BitString& x, const BitString& y, const BitString& w,
                                  int m, const ChannelParam& ch, int grid_size = 1024,
                                  int precision_bits = 0);

}  // namespace tracedist
