#pragma once

#include "lscd/graph.hpp"

#include <span>
#include <vector>

namespace lscd {

struct SampleParams {
    int radius = 2;                    // BFS depth per seed
    std::uint32_t outdegree_cap = 1000; // frontier vertices above this are dropped
    std::size_t frontier_cap = 1000;    // frontier vertices kept per seed
};

struct SampleResult {
    Graph graph;
    std::vector<Vertex> to_parent;  // sample id -> parent id
    std::vector<Vertex> seeds;      // seed positions inside the sample
    std::size_t vertices_touched;   // distinct parent vertices whose adjacency was read
};

/// BFS neighborhood sample around the seed set. Interior vertices (depth
/// < radius) are always kept; frontier vertices are dropped when their
/// degree exceeds outdegree_cap, then ranked by inward ratio (fraction of
/// their edges that point into the BFS ball) and capped at frontier_cap
/// per seed. The union over seeds always contains every seed.
SampleResult sample(const Graph& g, std::span<const Vertex> seeds, const SampleParams& params);

/// |sampled ∩ truth| / |truth|. Throws DataError on empty truth.
double coverage_ratio(std::span<const Vertex> sampled, std::span<const Vertex> truth);

} // namespace lscd
