#include "tracedist/gap_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracedist/multibit_poly.hpp"

namespace tracedist {

GapSearchResult lemma7_gap_search(const BitString& x, const BitString& y, const BitString& w,
                                  int m, const ChannelParam& ch, int grid_size,
                                  int precision_bits) {
  if (grid_size < 1) throw std::invalid_argument("lemma7_gap_search: grid_size must be positive");
  const int l = w.length();
  const IndicatorVector u = indicator_vector(x, w);
  const IndicatorVector v = indicator_vector(y, w);

  GapSearchResult out;
  out.certificate = lemma6_search(u, v, m, ch, precision_bits);

  const int p = std::max(96, out.certificate.precision_bits);
  const BigComplex z1(out.certificate.witness_z.real(), out.certificate.witness_z.imag(), p);

  const double lo = std::max(2.0 * ch.q() - 1.0, 0.0);
  const double hi = 1.0;

  double best_gap = -1.0;
  double best_z = hi;
  for (int t = 0; t < grid_size; ++t) {
    // Descending from 1 so that the z = 1 endpoint is present for any grid
    // size; ascending t maps to descending z.
    const double z = grid_size == 1 ? hi : hi - (hi - lo) * t / (grid_size - 1);
    std::vector<BigComplex> zs(static_cast<std::size_t>(l), BigComplex(z, 0.0, p));
    zs[0] = z1;
    const BigComplex fx = multibit_f<BigComplex>(x, w, zs);
    const BigComplex fy = multibit_f<BigComplex>(y, w, zs);
    const double gap = (fx - fy).abs().to_double();
    if (gap > best_gap) {
      best_gap = gap;
      best_z = z;
    }
  }

  out.z_common = best_z;
  out.gap = best_gap;
  out.zs.assign(static_cast<std::size_t>(l), {best_z, 0.0});
  out.zs[0] = out.certificate.witness_z;
  return out;
}

}  // namespace tracedist
