// Command line front end: pair generation, the end-to-end distinguishing
// experiment, scaling sweeps, lemma property suites, and raw channel
// simulation. Every subcommand is deterministic given its full flag set.
//
// Exit codes: 0 success, 1 validation/usage error, 2 property-suite failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tracedist/channel.hpp"
#include "tracedist/edit_distance.hpp"
#include "tracedist/experiment.hpp"
#include "tracedist/sampling.hpp"
#include "tracedist/serde.hpp"
#include "tracedist/verification.hpp"

namespace {

using nlohmann::json;
using namespace tracedist;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPropertyFailure = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return out;
}

FamilyMode parse_family(const std::string& name) {
  if (name == "windows") return FamilyMode::kWindows;
  if (name == "exhaustive") return FamilyMode::kExhaustive;
  if (name == "sampled") return FamilyMode::kSampled;
  throw std::invalid_argument("unknown family '" + name + "'");
}

int cmd_gen(int n, int k, std::uint64_t seed, const std::string& out_path) {
  if (n < 1) throw std::invalid_argument("gen: n must be positive");
  if (k < 1) throw std::invalid_argument("gen: degenerate pair (k = 0 forces x = y)");
  SplitMix64 rng(seed);
  BitString x, y;
  bool distinct = false;
  for (int attempt = 0; attempt < 64 && !distinct; ++attempt) {
    y = random_bitstring(n, rng);
    x = sample_from_edit_ball(y, k, rng);
    distinct = !(x == y);
  }
  if (!distinct) throw std::invalid_argument("gen: degenerate pair (could not sample x != y)");

  EditDistanceReport report;
  const bool member = edit_ball_membership(x, y, k, report);
  json j;
  j["x"] = x.str();
  j["y"] = y.str();
  j["n"] = n;
  j["k"] = k;
  j["seed"] = seed;
  j["deletions"] = report.deletions_needed;
  j["insertions"] = report.insertions_needed;
  j["report"] = std::to_string(report.deletions_needed) + " del / " +
                std::to_string(report.insertions_needed) + " ins";
  j["member"] = member;
  emit(j.dump(2), out_path);
  return kExitOk;
}

int cmd_distinguish(const ExperimentConfig& config, const std::string& out_path) {
  const ExperimentResult result = run_experiment(config);
  emit(result_to_json(result).dump(2), out_path);
  return kExitOk;
}

int cmd_sweep(const std::vector<int>& ns, const std::vector<int>& ks,
              const std::vector<ChannelParam>& qs, const ExperimentConfig& base,
              const std::string& out_path) {
  const std::vector<SweepRow> rows = scaling_sweep(ns, ks, qs, base);
  const std::vector<SlopeFit> fits = fit_sample_size_slopes(rows);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  emit(csv.str(), out_path);
  const std::string slopes = sweep_to_json(rows, fits)["slopes"].dump();
  if (out_path.empty()) {
    std::cerr << "slopes: " << slopes << '\n';
  } else {
    std::cout << "slopes: " << slopes << '\n';
  }
  return kExitOk;
}

int cmd_channel_sim(const std::string& x_text, const ChannelParam& ch, long long count,
                    std::uint64_t seed, const std::string& out_path) {
  const BitString x = BitString::parse(x_text);
  if (x.empty()) throw std::invalid_argument("channel-sim: empty input string");
  std::ostringstream buf;
  write_trace_batch(buf, x, ch, seed, count);
  emit(buf.str(), out_path);
  return kExitOk;
}

int cmd_verify(const std::string& lemma, int pairs, int n_min, int n_max, int k, int max_p,
               int points, int m_max, const ChannelParam& ch, std::uint64_t seed, int threads,
               int precision_bits, const std::string& out_path) {
  VerifyReport report;
  std::vector<Certificate> certificates;
  if (lemma == "2") {
    report = verify_lemma2(pairs, n_min, n_max, k, seed);
  } else if (lemma == "3") {
    report = verify_lemma3(pairs, 8, 30, seed);
  } else if (lemma == "4") {
    report = verify_lemma4(max_p);
  } else if (lemma == "5") {
    report = verify_lemma5(pairs, n_max, k, seed);
  } else if (lemma == "6") {
    (void)precision_bits;  // lemma6_search escalates on its own
    report = verify_lemma6(pairs, n_min, n_max, m_max, ch, seed, 50, &certificates, threads);
  } else if (lemma == "identity") {
    report = verify_identity(std::min(n_max, 10), points, ch, seed, 1e-12, threads);
  } else {
    throw std::invalid_argument("verify: unknown lemma id '" + lemma + "'");
  }

  std::cout << report.name << ": " << (report.cases - report.failures) << "/" << report.cases
            << " checks passed";
  if (lemma == "6") {
    std::cout << ", valid rate " << report.valid_rate * 100.0 << "% (n >= 50), " << report.flagged
              << " small-n certificates flagged";
  }
  std::cout << '\n';
  for (const std::string& note : report.notes) std::cout << "  failure: " << note << '\n';
  if (!out_path.empty() && lemma == "6") {
    json arr = json::array();
    for (const Certificate& cert : certificates) arr.push_back(certificate_to_json(cert));
    emit(arr.dump(2), out_path);
  }
  return report.passed() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deletion-channel trace statistics and edit-ball distinguishing"};
  app.require_subcommand(1);

  // Shared option storage.
  int n = 30, k = 1, trials = 100, threads = 0, precision_bits = 0;
  double delta = 0.05;
  std::string q_text = "0.2";
  std::uint64_t seed = 1;
  std::string out_path;
  std::string family = "windows";
  long long budget = 20000;
  std::optional<long long> sample_override;

  auto* gen = app.add_subcommand("gen", "Sample an (x, y) pair with x in the edit ball of y");
  gen->add_option("--n", n, "String length")->required();
  gen->add_option("--k", k, "Edit radius")->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* dist = app.add_subcommand("distinguish", "Run the two-hypothesis testing experiment");
  dist->add_option("--n", n, "String length");
  dist->add_option("--k", k, "Edit radius");
  dist->add_option("--q", q_text, "Deletion probability (decimal or fraction)");
  dist->add_option("--delta", delta, "Confidence parameter");
  dist->add_option("--trials", trials, "Number of trials");
  dist->add_option("--seed", seed, "RNG seed");
  dist->add_option("--N", sample_override, "Override the Hoeffding sample size");
  dist->add_option("--family", family, "Statistic family: windows|exhaustive|sampled");
  dist->add_option("--budget", budget, "Family search budget");
  dist->add_option("--threads", threads, "Worker threads (0 = hardware)");
  std::string config_path;
  dist->add_option("--config", config_path, "Load an experiment config JSON file");
  dist->add_option("--out", out_path, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Scaling sweep over (n, k, q) grids");
  std::string n_list = "20,30,40", k_list = "1", q_list = "0.2";
  sweep->add_option("--n", n_list, "Comma-separated n values");
  sweep->add_option("--k", k_list, "Comma-separated k values");
  sweep->add_option("--q", q_list, "Comma-separated q values");
  sweep->add_option("--delta", delta, "Confidence parameter");
  sweep->add_option("--trials", trials, "Trials per grid point");
  sweep->add_option("--seed", seed, "RNG seed");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a lemma property suite");
  std::string lemma;
  int pairs = 200, n_min = 20, max_p = 5, points = 100, m_max = 4;
  int verify_n_max = 60;
  verify->add_option("--lemma", lemma, "Lemma id: 2|3|4|5|6|identity")->required();
  verify->add_option("--pairs", pairs, "Random instances to draw");
  verify->add_option("--n-min", n_min, "Smallest instance size");
  verify->add_option("--n-max", verify_n_max, "Largest instance size");
  verify->add_option("--k", k, "Edit radius (lemma 2) / max radius (lemma 5)");
  verify->add_option("--max-p", max_p, "Exhaustive half-length bound (lemma 4)");
  verify->add_option("--points", points, "Evaluation points (identity)");
  verify->add_option("--m-max", m_max, "Largest separating power to certify (lemma 6)");
  verify->add_option("--q", q_text, "Deletion probability (decimal or fraction)");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
  verify->add_option("--precision-bits", precision_bits, "Override evaluation precision");
  verify->add_option("--out", out_path, "Certificate JSON output (lemma 6)");

  auto* sim = app.add_subcommand("channel-sim", "Emit newline-delimited traces of a string");
  std::string x_text;
  long long count = 1000;
  sim->add_option("--x", x_text, "Input bit string")->required();
  sim->add_option("--q", q_text, "Deletion probability (decimal or fraction)");
  sim->add_option("--N", count, "Number of traces");
  sim->add_option("--seed", seed, "RNG seed");
  sim->add_option("--out", out_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(n, k, seed, out_path);
    if (dist->parsed()) {
      ExperimentConfig config;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
        json j;
        in >> j;
        config = config_from_json(j);
      } else {
        config.n = n;
        config.k = k;
        config.channel = ChannelParam::parse(q_text);
        config.delta = delta;
        config.trials = trials;
        config.seed = seed;
        config.sample_size_override = sample_override;
        config.family = parse_family(family);
        config.budget = budget;
      }
      config.threads = threads;
      config.validate();
      return cmd_distinguish(config, out_path);
    }
    if (sweep->parsed()) {
      ExperimentConfig base;
      base.delta = delta;
      base.trials = trials;
      base.seed = seed;
      base.threads = threads;
      std::vector<ChannelParam> qs;
      std::stringstream ss(q_list);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) qs.push_back(ChannelParam::parse(item));
      }
      return cmd_sweep(parse_int_list(n_list), parse_int_list(k_list), qs, base, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(lemma, pairs, n_min, verify_n_max, k, max_p, points, m_max,
                        ChannelParam::parse(q_text), seed, threads, precision_bits, out_path);
    }
    if (sim->parsed()) {
      return cmd_channel_sim(x_text, ChannelParam::parse(q_text), count, seed, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  return kExitUsage;
}
