#include "tracedist/edit_distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tracedist {

int lcs_length(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<int> prev(m + 1, 0);
  std::vector<int> cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

namespace {

EditDistanceReport report_from_lcs(int xlen, int ylen, int lcs) {
  EditDistanceReport r;
  r.lcs_length = lcs;
  r.deletions_needed = ylen - lcs;
  r.insertions_needed = xlen - lcs;
  return r;
}

}  // namespace

EditDistanceReport edit_report(const BitString& x, const BitString& y) {
  const int lcs = lcs_length(x.bits(), y.bits());
  return report_from_lcs(x.length(), y.length(), lcs);
}

EditDistanceReport edit_report(const IndicatorVector& x, const IndicatorVector& y) {
  const int lcs = lcs_length(x.entries, y.entries);
  return report_from_lcs(x.length(), y.length(), lcs);
}

bool edit_ball_membership(const BitString& x, const BitString& y, int k) {
  EditDistanceReport unused;
  return edit_ball_membership(x, y, k, unused);
}

bool edit_ball_membership(const BitString& x, const BitString& y, int k,
                          EditDistanceReport& report) {
  if (k < 0) throw std::invalid_argument("edit_ball_membership: k must be nonnegative");
  report = edit_report(x, y);
  return report.deletions_needed <= k && report.insertions_needed <= k;
}

}  // namespace tracedist
