#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/circle_search.hpp"

namespace tracedist {

/// One randomly generated two-hypothesis instance in MAIN-mode position:
/// the first difference sits at t0 > 12k, the pattern w is the non-periodic
/// extension of x_{t0-12k+1 : t0-1}, and m is the smallest separating power
/// of the two indicator vectors.
struct PipelineInstance {
  BitString x;
  BitString y;
  BitString w;
  IndicatorVector u;  // indicator of w in x
  IndicatorVector v;  // indicator of w in y
  int n = 0;
  int k = 0;
  int t0 = 0;
  std::optional<int> m;              // within [12k+1] when present
  std::optional<int> m_certificate;  // smallest m >= 0; 0 when counts differ
};

/// Draws an instance with edits confined to positions > 12k so that t0 >= 12k
/// always holds; the pair is post-checked against the LCS oracle. Requires
/// n >= 12k + 2. Throws after too many degenerate draws (x == y).
PipelineInstance make_pipeline_instance(int n, int k, SplitMix64& rng);

/// Outcome of one property suite run.
struct VerifyReport {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  long long flagged = 0;  // logged-but-not-failing observations
  double valid_rate = 1.0;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
};

/// Separating power exists within [12k+1] on random MAIN-mode instances.
VerifyReport verify_lemma2(int pairs, int n_min, int n_max, int k, std::uint64_t seed);

/// Root multiplicity at z=1 of the difference polynomial equals the smallest
/// power at which the exponent power sums differ, over random equal-size
/// integer set pairs.
VerifyReport verify_lemma3(int pairs, int max_size, int max_value, std::uint64_t seed);

/// Exhaustive: appending a bit to any odd-length string yields a non-periodic
/// string, for all lengths 2p-1 with p <= max_p.
VerifyReport verify_lemma4(int max_p);

/// Indicator vectors of pipeline instances lie in the run-length class
/// R_{n,6k} and stay within 5k deletions / 5k insertions of each other.
VerifyReport verify_lemma5(int pairs, int n_max, int k_max, std::uint64_t seed);

/// Circle-search certificates on pipeline instances: valid (witness clears
/// the bound, channel factor <= 2) and candidate average >= 1 whenever
/// n >= valid_threshold; smaller instances are logged, not failed.
/// Instances with m > m_max are skipped and redrawn.
VerifyReport verify_lemma6(int pairs, int n_min, int n_max, int m_max, const ChannelParam& ch,
                           std::uint64_t seed, int valid_threshold = 50,
                           std::vector<Certificate>* certificates = nullptr, int threads = 0);

/// Multi-bit statistics identity against the enumeration oracle: every x with
/// |x| <= n_max, pattern lengths 1..3, residual <= tolerance under the
/// calibrated convention. A pool of `points` random evaluation points with
/// |z_i| <= 1.2 is drawn; each (x, l) case uses one pooled point and the full
/// pool is additionally swept on a fixed string.
VerifyReport verify_identity(int n_max, int points, const ChannelParam& ch, std::uint64_t seed,
                             double tolerance = 1e-12, int threads = 0);

}  // namespace tracedist
