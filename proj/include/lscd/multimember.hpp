#pragma once

#include "lscd/pipeline.hpp"

#include <vector>

namespace lscd {

struct MembershipResult {
    std::vector<DetectionResult> communities; // processing order; all contain the query vertex
    std::vector<std::vector<Vertex>> skipped; // candidates absorbed by earlier communities
    std::size_t om_estimate = 0;
};

/// All communities containing vertex s, one detection per ego component.
/// Candidates already covered by earlier communities are skipped; while a
/// candidate is processed, s's edges to the other ego neighbors are cut on
/// a working copy so the other structures do not interfere.
MembershipResult find_all_memberships(const Graph& g, Vertex s, const DetectionParams& params,
                                      std::size_t candidate_cap = 50);

} // namespace lscd
