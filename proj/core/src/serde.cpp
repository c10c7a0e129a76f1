#include "tracedist/serde.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tracedist {

using nlohmann::json;

namespace {

const char* family_name(FamilyMode mode) {
  switch (mode) {
    case FamilyMode::kWindows:
      return "windows";
    case FamilyMode::kExhaustive:
      return "exhaustive";
    case FamilyMode::kSampled:
      return "sampled";
  }
  return "windows";
}

FamilyMode family_from_name(const std::string& name) {
  if (name == "windows") return FamilyMode::kWindows;
  if (name == "exhaustive") return FamilyMode::kExhaustive;
  if (name == "sampled") return FamilyMode::kSampled;
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
  json j;
  j["m"] = cert.separating_power;
  j["order"] = cert.divisibility_order;
  const BigInt l1 = cert.quotient.l1_norm();
  if (l1 <= std::numeric_limits<long long>::max()) {
    j["quotient_l1"] = l1.convert_to<long long>();
  } else {
    j["quotient_l1"] = l1.str();
  }
  j["z"] = {{"re", cert.witness_z.real()}, {"im", cert.witness_z.imag()}};
  j["value"] = cert.witness_value.to_double();
  j["bound"] = cert.bound.to_double();
  j["channel_factor"] = cert.channel_factor.to_double();
  j["valid"] = cert.valid;
  j["avg_over_D"] = cert.avg_over_candidates.to_double();
  return j;
}

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["n"] = config.n;
  j["k"] = config.k;
  if (config.channel.is_exact()) {
    const Rational& q = config.channel.exact_q();
    std::ostringstream text;
    text << numerator(q) << '/' << denominator(q);
    j["q"] = text.str();
  } else {
    j["q"] = config.channel.q();
  }
  j["delta"] = config.delta;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  if (config.sample_size_override) j["N"] = *config.sample_size_override;
  j["family"] = family_name(config.family);
  j["budget"] = config.budget;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig config;
  config.n = j.at("n").get<int>();
  config.k = j.at("k").get<int>();
  const auto& q = j.at("q");
  if (q.is_string()) {
    config.channel = ChannelParam::parse(q.get<std::string>());
  } else {
    config.channel = ChannelParam::from_double(q.get<double>());
  }
  if (j.contains("delta")) config.delta = j.at("delta").get<double>();
  if (j.contains("trials")) config.trials = j.at("trials").get<int>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("N") && !j.at("N").is_null()) {
    config.sample_size_override = j.at("N").get<long long>();
  }
  if (j.contains("family")) config.family = family_from_name(j.at("family").get<std::string>());
  if (j.contains("budget")) config.budget = j.at("budget").get<long long>();
  if (j.contains("threads")) config.threads = j.at("threads").get<int>();
  config.validate();
  return config;
}

json result_to_json(const ExperimentResult& result) {
  json j;
  j["trials"] = result.decisions;
  j["errors"] = result.errors;
  j["error_rate"] = result.error_rate;
  j["measured_gap"] = result.mean_gap;
  j["mean_N"] = result.mean_sample_size;
  j["wall_seconds"] = result.wall_seconds;
  j["config"] = config_to_json(result.config);
  return j;
}

json plan_to_json(const PipelinePlan& plan) {
  json j;
  j["mode"] = plan.mode == PlanMode::kMain ? "MAIN" : "SMALL_T0_FALLBACK";
  j["t0"] = plan.t0;
  j["w"] = plan.w.str();
  j["family_size"] = plan.family_size;
  j["pattern"] = plan.chosen.pattern.str();
  j["indices"] = plan.chosen.indices;
  j["E_x"] = plan.e_x;
  j["E_y"] = plan.e_y;
  j["gap"] = plan.gap;
  j["delta"] = plan.delta;
  j["N"] = plan.sample_size;
  return j;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n,k,q,gap,N,error_rate,seed\n";
  for (const SweepRow& r : rows) {
    out << r.n << ',' << r.k << ',' << r.q << ',' << r.gap << ',' << r.sample_size << ','
        << r.error_rate << ',' << r.seed << '\n';
  }
}

json sweep_to_json(const std::vector<SweepRow>& rows, const std::vector<SlopeFit>& fits) {
  json j;
  j["rows"] = json::array();
  for (const SweepRow& r : rows) {
    j["rows"].push_back({{"n", r.n},
                         {"k", r.k},
                         {"q", r.q},
                         {"gap", r.gap},
                         {"N", r.sample_size},
                         {"error_rate", r.error_rate},
                         {"seed", r.seed}});
  }
  j["slopes"] = json::array();
  for (const SlopeFit& f : fits) {
    j["slopes"].push_back({{"k", f.k}, {"slope", f.slope}, {"points", f.points}});
  }
  return j;
}

}  // namespace tracedist
