#include "tracedist/verification.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tracedist/edit_distance.hpp"
#include "tracedist/int_polynomial.hpp"
#include "tracedist/mbs_identity.hpp"
#include "tracedist/power_sums.hpp"
#include "tracedist/sampling.hpp"

namespace tracedist {

namespace {

constexpr int kResampleLimit = 256;

void note_failure(VerifyReport& report, const std::string& text) {
  ++report.failures;
  if (report.notes.size() < 8) report.notes.push_back(text);
}

int thread_count(int requested, long long work_items) {
  int t = requested > 0 ? requested
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<int>(std::min<long long>(t, work_items));
}

}  // namespace

PipelineInstance make_pipeline_instance(int n, int k, SplitMix64& rng) {
  if (k < 1) throw std::invalid_argument("make_pipeline_instance: k must be positive");
  if (n < 12 * k + 2) {
    throw std::invalid_argument("make_pipeline_instance: n must be at least 12k + 2");
  }
  EditSampleOptions opts;
  opts.min_position = 12 * k + 1;
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    BitString y = random_bitstring(n, rng);
    BitString x = sample_from_edit_ball(y, k, rng, opts);
    if (x == y) continue;
    EditDistanceReport report;
    if (!edit_ball_membership(x, y, k, report)) {
      throw std::logic_error("make_pipeline_instance: sampler left the edit ball");
    }
    const auto t0 = first_diff_index(x, y);
    if (!t0 || *t0 <= 12 * k) {
      throw std::logic_error("make_pipeline_instance: first difference in protected prefix");
    }
    PipelineInstance inst;
    inst.n = n;
    inst.k = k;
    inst.t0 = *t0;
    inst.w = extend_to_nonperiodic(x.substring(*t0 - 12 * k + 1, *t0 - 1));
    inst.u = indicator_vector(x, inst.w);
    inst.v = indicator_vector(y, inst.w);
    inst.m = find_separating_power(inst.u, inst.v, 12 * k + 1);
    inst.m_certificate = smallest_separating_power(inst.u, inst.v, 12 * k + 1);
    inst.x = std::move(x);
    inst.y = std::move(y);
    return inst;
  }
  throw std::runtime_error("make_pipeline_instance: too many degenerate draws");
}

VerifyReport verify_lemma2(int pairs, int n_min, int n_max, int k, std::uint64_t seed) {
  if (n_min > n_max) throw std::invalid_argument("verify_lemma2: n_min > n_max");
  VerifyReport report;
  report.name = "separating power within [12k+1]";
  for (int i = 0; i < pairs; ++i) {
    SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(i)));
    const int lo = std::max(n_min, 12 * k + 2);
    const int n = lo + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(std::max(1, n_max - lo + 1))));
    const PipelineInstance inst = make_pipeline_instance(n, k, rng);
    ++report.cases;
    if (!inst.m) {
      std::ostringstream msg;
      msg << "no separating power within [" << 12 * k + 1 << "] for x=" << inst.x.str()
          << " y=" << inst.y.str();
      note_failure(report, msg.str());
    }
  }
  return report;
}

VerifyReport verify_lemma3(int pairs, int max_size, int max_value, std::uint64_t seed) {
  if (max_size < 1 || max_value < 1) throw std::invalid_argument("verify_lemma3: bad sizes");
  VerifyReport report;
  report.name = "root multiplicity at 1 matches power-sum agreement order";
  SplitMix64 rng(SplitMix64::derive(seed, 0x3a));
  for (int i = 0; i < pairs; ++i) {
    const int size = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_size)));
    // Two distinct sets of size `size` drawn from {0, ..., max_value}.
    auto draw_set = [&](std::vector<int>& out) {
      out.clear();
      while (static_cast<int>(out.size()) < size) {
        const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_value + 1)));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
      std::sort(out.begin(), out.end());
    };
    std::vector<int> alpha, beta;
    draw_set(alpha);
    do {
      draw_set(beta);
    } while (beta == alpha);

    const IntPolynomial f =
        IntPolynomial::from_exponents(alpha) - IntPolynomial::from_exponents(beta);
    const int order = divisibility_order(f, 2 * max_value + 2);

    int agreement = -1;  // smallest j >= 1 with differing power sums
    for (int j = 1; j <= 2 * max_value + 2; ++j) {
      BigInt sa = 0, sb = 0;
      for (int a : alpha) sa += pow_int(BigInt(a), j);
      for (int b : beta) sb += pow_int(BigInt(b), j);
      if (sa != sb) {
        agreement = j;
        break;
      }
    }
    ++report.cases;
    if (agreement != order) {
      std::ostringstream msg;
      msg << "order " << order << " != smallest separating power " << agreement;
      note_failure(report, msg.str());
    }
  }
  return report;
}

VerifyReport verify_lemma4(int max_p) {
  if (max_p < 1) throw std::invalid_argument("verify_lemma4: max_p must be positive");
  VerifyReport report;
  report.name = "non-periodic extension of odd-length strings";
  for (int p = 1; p <= max_p; ++p) {
    const int len = 2 * p - 1;
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      BitString w_prime;
      for (int j = 0; j < len; ++j) w_prime.push_back(static_cast<int>((bits >> j) & 1));
      const BitString extended = extend_to_nonperiodic(w_prime);
      ++report.cases;
      if (extended.length() != len + 1 || !is_non_periodic(extended)) {
        note_failure(report, "periodic extension for w'=" + w_prime.str());
      }
    }
  }
  return report;
}

VerifyReport verify_lemma5(int pairs, int n_max, int k_max, std::uint64_t seed) {
  VerifyReport report;
  report.name = "indicator vectors: run-length class and 5k edit bound";
  for (int i = 0; i < pairs; ++i) {
    SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(i)));
    const int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k_max)));
    const int lo = 12 * k + 2;
    if (lo > n_max) {
      throw std::invalid_argument("verify_lemma5: n_max too small for requested k_max");
    }
    const int n =
        lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_max - lo + 1)));
    const PipelineInstance inst = make_pipeline_instance(n, k, rng);
    ++report.cases;

    const int p = 6 * k;  // |w| = 12k = 2p
    std::ostringstream why;
    bool ok = true;
    if (!in_runlength_class(inst.u, p)) {
      ok = false;
      why << "indicator of x outside R_{n," << p << "}; ";
    }
    if (!in_runlength_class(inst.v, p)) {
      ok = false;
      why << "indicator of y outside R_{n," << p << "}; ";
    }
    const EditDistanceReport ed = edit_report(inst.u, inst.v);
    if (ed.deletions_needed > 5 * k || ed.insertions_needed > 5 * k) {
      ok = false;
      why << "indicator distance " << ed.deletions_needed << " del / " << ed.insertions_needed
          << " ins exceeds 5k = " << 5 * k;
    }
    if (!ok) note_failure(report, why.str() + " (x=" + inst.x.str() + ", y=" + inst.y.str() + ")");
  }
  return report;
}

VerifyReport verify_lemma6(int pairs, int n_min, int n_max, int m_max, const ChannelParam& ch,
                           std::uint64_t seed, int valid_threshold,
                           std::vector<Certificate>* certificates, int threads) {
  if (n_min > n_max) throw std::invalid_argument("verify_lemma6: n_min > n_max");
  VerifyReport report;
  report.name = "circle-search certificates on pipeline instances";

  struct Outcome {
    int n = 0;
    bool generated = false;
    bool valid = false;
    bool avg_ok = false;
    Certificate cert;
    std::string error;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(pairs));

  auto run_one = [&](int i) {
    Outcome& out = outcomes[static_cast<std::size_t>(i)];
    SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(i)));
    for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
      const int lo = std::max(n_min, 14);
      const int n =
          lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_max - lo + 1)));
      const PipelineInstance inst = make_pipeline_instance(n, 1, rng);
      if (!inst.m_certificate) {
        out.error = "no separating power for x=" + inst.x.str();
        return;
      }
      if (*inst.m_certificate > m_max) continue;  // redraw: out of certificate scope
      out.n = n;
      out.generated = true;
      out.cert = lemma6_search(inst.u, inst.v, *inst.m_certificate, ch);
      out.valid = out.cert.valid;
      out.avg_ok = out.cert.avg_at_least_one;
      return;
    }
    out.error = "could not draw an instance with m <= " + std::to_string(m_max);
  };

  const int workers = thread_count(threads, pairs);
  if (workers <= 1) {
    for (int i = 0; i < pairs; ++i) run_one(i);
  } else {
    std::vector<std::future<void>> futures;
    std::atomic<int> next{0};
    for (int t = 0; t < workers; ++t) {
      futures.push_back(std::async(std::launch::async, [&] {
        for (int i = next.fetch_add(1); i < pairs; i = next.fetch_add(1)) run_one(i);
      }));
    }
    for (auto& f : futures) f.get();
  }

  long long eligible = 0;
  long long eligible_valid = 0;
  for (const Outcome& out : outcomes) {
    ++report.cases;
    if (!out.generated) {
      note_failure(report, out.error);
      continue;
    }
    if (certificates) certificates->push_back(out.cert);
    const bool must_hold = out.n >= valid_threshold;
    if (must_hold) {
      ++eligible;
      if (out.valid && out.avg_ok) {
        ++eligible_valid;
      } else {
        std::ostringstream msg;
        msg << "n=" << out.n << " m=" << out.cert.separating_power
            << (out.valid ? "" : " certificate invalid")
            << (out.avg_ok ? "" : " candidate average below 1");
        note_failure(report, msg.str());
      }
    } else if (!out.valid || !out.avg_ok) {
      ++report.flagged;  // small-n certificates may fail the asymptotic bound
    }
  }
  report.valid_rate = eligible == 0 ? 1.0
                                    : static_cast<double>(eligible_valid) /
                                          static_cast<double>(eligible);
  return report;
}

VerifyReport verify_identity(int n_max, int points, const ChannelParam& ch, std::uint64_t seed,
                             double tolerance, int threads) {
  if (n_max < 1 || n_max > 20) throw std::invalid_argument("verify_identity: n_max out of range");
  if (points < 1) throw std::invalid_argument("verify_identity: points must be positive");
  VerifyReport report;
  report.name = "multi-bit statistics identity vs enumeration oracle";

  constexpr int kMaxArity = 3;
  // Pool of evaluation points: tuples of kMaxArity complex numbers inside the
  // radius-1.2 disk (each case uses the prefix it needs).
  SplitMix64 pool_rng(SplitMix64::derive(seed, 0x1d));
  std::vector<std::vector<std::complex<double>>> pool;
  pool.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    std::vector<std::complex<double>> zs;
    for (int j = 0; j < kMaxArity; ++j) {
      double re = 0.0, im = 0.0;
      do {
        re = 2.4 * pool_rng.next_double() - 1.2;
        im = 2.4 * pool_rng.next_double() - 1.2;
      } while (re * re + im * im > 1.2 * 1.2);
      zs.emplace_back(re, im);
    }
    pool.push_back(std::move(zs));
  }

  struct Case {
    BitString x;
    BitString w;
    std::size_t point;
  };
  std::vector<Case> cases;
  SplitMix64 case_rng(SplitMix64::derive(seed, 0x2e));
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      BitString x;
      for (int j = 0; j < n; ++j) x.push_back(static_cast<int>((bits >> j) & 1));
      for (int l = 1; l <= std::min(kMaxArity, n); ++l) {
        Case c;
        c.x = x;
        c.w = random_bitstring(l, case_rng);
        c.point = static_cast<std::size_t>(
            case_rng.next_below(static_cast<std::uint64_t>(points)));
        cases.push_back(std::move(c));
      }
    }
  }
  // Sweep the full pool on one fixed string so every point is exercised.
  {
    BitString x;
    for (int j = 0; j < std::min(8, n_max); ++j) x.push_back(j % 2);
    for (std::size_t pt = 0; pt < pool.size(); ++pt) {
      for (int l = 1; l <= std::min(kMaxArity, x.length()); ++l) {
        Case c;
        c.x = x;
        c.w = random_bitstring(l, case_rng);
        c.point = pt;
        cases.push_back(std::move(c));
      }
    }
  }

  std::vector<double> residuals(cases.size(), 0.0);
  std::vector<std::string> matched(cases.size());
  auto run_case = [&](std::size_t i) {
    const Case& c = cases[i];
    const int l = c.w.length();
    const auto& zs = pool[c.point];
    const IdentityCheckResult res = verify_mbs_identity(
        c.x, c.w, std::span<const std::complex<double>>(zs.data(), static_cast<std::size_t>(l)),
        ch);
    residuals[i] = res.residual;
    matched[i] = res.matched;
  };

  const int workers = thread_count(threads, static_cast<long long>(cases.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_case(i);
  } else {
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < workers; ++t) {
      futures.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1)) {
          run_case(i);
        }
      }));
    }
    for (auto& f : futures) f.get();
  }

  for (std::size_t i = 0; i < cases.size(); ++i) {
    ++report.cases;
    if (residuals[i] > tolerance || matched[i] != "calibrated") {
      std::ostringstream msg;
      msg << "residual " << residuals[i] << " (" << matched[i] << ") for x=" << cases[i].x.str()
          << " w=" << cases[i].w.str();
      note_failure(report, msg.str());
    }
  }
  return report;
}

}  // namespace tracedist
