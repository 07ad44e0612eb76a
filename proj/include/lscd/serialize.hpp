#pragma once

#include "lscd/eval.hpp"
#include "lscd/multimember.hpp"
#include "lscd/pipeline.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace lscd {

/// JSON views of the result types; vertex ids are always external ids.
nlohmann::json to_json(const Graph& g, const DetectionResult& result);
nlohmann::json to_json(const Graph& g, const MembershipResult& result);
nlohmann::json to_json(const Report& report);
nlohmann::json to_json(const GroundTruthStats& stats);

/// trial_id, community_id, strategy, seeds, |C|, |T|, P, R, F1, rounds, ms
void write_report_csv(std::ostream& out, const Report& report);

/// Experiment configuration, parsed from a JSON file.
ExperimentConfig load_experiment_config(const std::string& path);

/// Sampled subgraph (or any graph) as a SNAP edge list over external ids.
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace lscd
