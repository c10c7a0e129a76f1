#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <vector>

#include "tracedist/circle_search.hpp"
#include "tracedist/experiment.hpp"
#include "tracedist/plan.hpp"

namespace tracedist {

/// Certificate schema:
/// {m, order, quotient_l1, z: {re, im}, value, bound, channel_factor, valid,
///  avg_over_D}
nlohmann::json certificate_to_json(const Certificate& cert);

/// Config schema: {n, k, q: number|"p/q", delta, trials, seed, N?, family,
/// budget}; q given as a fraction string keeps exact arithmetic available.
nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const ExperimentResult& result);
nlohmann::json plan_to_json(const PipelinePlan& plan);

/// CSV with the fixed 7-column header n,k,q,gap,N,error_rate,seed.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows,
                             const std::vector<SlopeFit>& fits);

}  // namespace tracedist
