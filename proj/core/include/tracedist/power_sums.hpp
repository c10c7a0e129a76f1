#pragma once

#include <optional>

#include "tracedist/bitstring.hpp"
#include "tracedist/exact_arith.hpp"

namespace tracedist {

/// Exact weighted power sum sum_i i^m v_i over 1-based positions, m >= 0.
BigInt power_sum(const IndicatorVector& v, int m);
BigInt power_sum(const BitString& v, int m);

/// Exact sum_i (sum_{j<=i} j^m) v_i, m >= 0.
BigInt prefix_power_sum(const IndicatorVector& v, int m);
BigInt prefix_power_sum(const BitString& v, int m);

/// Smallest m in {1,...,m_max} with power_sum(u,m) != power_sum(v,m), or
/// nullopt when all agree. Requires |u| == |v|.
std::optional<int> find_separating_power(const IndicatorVector& u, const IndicatorVector& v,
                                         int m_max);

/// Same search including m = 0 (the number of ones). This is the exponent
/// entering the certificate: it equals the multiplicity of the root of
/// poly(u) - poly(v) at z = 1, with m = 0 whenever the occurrence counts
/// already differ.
std::optional<int> smallest_separating_power(const IndicatorVector& u, const IndicatorVector& v,
                                             int m_max);

}  // namespace tracedist
