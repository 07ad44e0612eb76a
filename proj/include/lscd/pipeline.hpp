#pragma once

#include "lscd/lp.hpp"
#include "lscd/sampler.hpp"
#include "lscd/scoring.hpp"
#include "lscd/seeding.hpp"
#include "lscd/spectral.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lscd {

enum class TruncationMode { metric_boundary, fixed_size };

struct DetectionParams {
    int d = 3;
    int k = 3;
    WalkVariant variant = WalkVariant::rw;
    SampleParams sample;
    int strengthen_l = 4;       // 3 suits Amazon-like graphs
    double gamma = 1.7;
    int delta = 5;              // reseeding expansion step
    Metric metric = Metric::cond;
    TruncationMode truncation = TruncationMode::metric_boundary;
    std::size_t fixed_size = 0; // required in fixed_size mode
    int max_reseed_rounds = 10; // 0 disables reseeding
    std::optional<double> epsilon; // optional conductance filter on the result
};

struct Community {
    std::vector<Vertex> members; // rank order, parent-graph ids
    std::vector<double> scores;  // matching y values
    CommunityStats stats;        // on the sampled scoring graph
    Metric metric = Metric::cond;
    double score = 0.0;
};

struct RoundInfo {
    int round = 0;
    std::size_t seed_count = 0;
    std::size_t community_size = 0;
    double score = 0.0;
    bool accepted = false; // false once quality declined or LP failed
    std::string note;
};

struct DetectionResult {
    Community community;
    std::vector<Vertex> ranked;        // full sample in rank order, parent ids
    std::vector<double> ranked_scores; // matching y values
    std::vector<RoundInfo> trace;
    std::size_t sample_size = 0;
    std::size_t vertices_touched = 0;
    std::vector<std::string> warnings;
    bool epsilon_rejected = false;
};

/// Full local detection: sample, strengthen, build the local spectral
/// basis, recover the sparse indicator, truncate, then reseed until the
/// community score stops improving. Deterministic for fixed inputs.
/// Throws DetectionFailure when the round-0 LP is infeasible.
DetectionResult detect(const Graph& g, std::span<const Vertex> seeds, const DetectionParams& params);

/// detect() with truncation pinned to the top `size` ranked vertices in
/// every round (the known-community-size protocol).
DetectionResult detect_fixed_size(const Graph& g, std::span<const Vertex> seeds, std::size_t size,
                                  DetectionParams params);

} // namespace lscd
