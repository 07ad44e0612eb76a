#pragma once

#include "lscd/graph.hpp"
#include "lscd/pipeline.hpp"
#include "lscd/rng.hpp"
#include "lscd/seeding.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lscd {

struct F1Score {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// P = |C∩T|/|C|, R = |C∩T|/|T|, F1 = 2|C∩T|/(|C|+|T|), over external ids.
F1Score f1_score(std::span<const ExternalId> detected, std::span<const ExternalId> truth);

struct GroundTruth {
    std::vector<std::vector<ExternalId>> communities; // each sorted ascending
    std::map<ExternalId, std::vector<std::size_t>> memberships;

    std::size_t om(ExternalId v) const {
        auto it = memberships.find(v);
        return it == memberships.end() ? 0 : it->second.size();
    }
};

/// One community per line, whitespace-separated external ids. With dedup,
/// identical sets collapse to one.
GroundTruth load_ground_truth(const std::string& path, bool dedup);
GroundTruth ground_truth_from_sets(std::vector<std::vector<ExternalId>> sets, bool dedup);

struct GroundTruthStats {
    std::size_t community_count = 0;
    double mean_size = 0.0;
    double std_size = 0.0;
    double mean_conductance = 0.0;
};

/// Size and conductance statistics over the whole graph (the global view).
GroundTruthStats ground_truth_stats(const Graph& g, const GroundTruth& gt);

struct PlantedParams {
    std::size_t blocks = 10;
    std::size_t block_size = 20;
    double p_in = 0.3;
    double p_out = 0.02;
};

struct PlantedGraph {
    Graph graph;
    GroundTruth truth;
};

/// Planted-partition random graph; blocks are the ground truth.
PlantedGraph generate_planted_partition(const PlantedParams& params, Rng& rng);

enum class ExperimentMode { detect, multi };

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::detect;
    std::string graph_path;                 // with truth_path, or...
    std::string truth_path;
    std::optional<PlantedParams> planted;   // ...a generated benchmark per trial
    std::size_t trials = 50;                // planted: trials; datasets: target communities
    std::size_t seeds_per_community = 3;
    SeedStrategy strategy = SeedStrategy::random;
    bool truncate_to_truth_size = false;    // the known-size protocol
    DetectionParams params;
    std::uint64_t rng_seed = 1;
    int workers = 1;
    std::size_t per_om_vertices = 20;       // multi mode: queries per om group
    std::size_t max_om = 5;                 // multi mode: largest om group
};

struct TrialRow {
    std::size_t trial_id = 0;
    std::size_t community_id = 0;
    std::string strategy;
    std::vector<ExternalId> seeds;
    std::size_t detected_size = 0;
    std::size_t truth_size = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    int rounds = 0;
    double millis = 0.0;
    bool failed = false;
    std::string error;
};

struct OmGroupStats {
    std::size_t queries = 0;
    std::size_t truth_pairs = 0;
    double mean_f1 = 0.0;
};

struct Report {
    std::vector<TrialRow> rows; // sorted by trial id
    double mean_f1 = 0.0;
    double std_f1 = 0.0;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
    double mean_millis = 0.0;
    std::size_t failures = 0;
    std::map<std::size_t, OmGroupStats> per_om; // multi mode only
};

/// Run the full protocol described by the config: pick target communities,
/// draw seeds, detect, score against the seeds' own community. Trials run
/// on `workers` threads; rows are reduced in trial order so the report is
/// reproducible from the rng seed alone.
Report run_experiment(const ExperimentConfig& cfg);

} // namespace lscd
