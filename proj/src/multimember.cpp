#include "lscd/multimember.hpp"

#include <algorithm>
#include <unordered_set>

namespace lscd {

namespace {

// largest-internal-degree members of the candidate, ties by id
std::vector<Vertex> trim_candidate(const Graph& g, const std::vector<Vertex>& candidate,
                                   std::size_t cap) {
    if (candidate.size() <= cap)
        return candidate;
    std::unordered_set<Vertex> in(candidate.begin(), candidate.end());
    std::vector<std::pair<std::size_t, Vertex>> ranked;
    ranked.reserve(candidate.size());
    for (Vertex v : candidate) {
        std::size_t internal = 0;
        for (Vertex w : g.neighbors(v))
            if (in.count(w))
                ++internal;
        ranked.emplace_back(internal, v);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<Vertex> out;
    out.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i)
        out.push_back(ranked[i].second);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

MembershipResult find_all_memberships(const Graph& g, Vertex s, const DetectionParams& params,
                                      std::size_t candidate_cap) {
    if (!g.valid(s))
        throw DataError("find_all_memberships: invalid vertex");

    MembershipResult result;
    std::vector<std::vector<Vertex>> candidates = ego_components(g, s);
    if (candidates.empty())
        return result; // isolated vertex

    std::unordered_set<Vertex> covered; // union of earlier communities, without s
    for (auto& candidate : candidates) {
        bool absorbed = !candidate.empty();
        for (Vertex v : candidate)
            if (!covered.count(v)) {
                absorbed = false;
                break;
            }
        if (absorbed) {
            result.skipped.push_back(candidate);
            continue;
        }

        std::vector<Vertex> seeds = trim_candidate(g, candidate, candidate_cap);
        Graph working = g.without_edges_at(s, seeds);
        seeds.push_back(s);
        std::sort(seeds.begin(), seeds.end());

        DetectionResult det;
        try {
            det = detect(working, seeds, params);
        } catch (const DetectionFailure&) {
            result.skipped.push_back(candidate); // no community recoverable from this component
            continue;
        }

        // the query vertex belongs in every membership community; extend the
        // prefix minimally if the cut left it out
        if (std::find(det.community.members.begin(), det.community.members.end(), s) ==
            det.community.members.end()) {
            auto pos = std::find(det.ranked.begin(), det.ranked.end(), s);
            if (pos != det.ranked.end()) {
                std::size_t need = static_cast<std::size_t>(pos - det.ranked.begin()) + 1;
                det.community.members.assign(det.ranked.begin(), det.ranked.begin() + need);
                det.community.scores.assign(det.ranked_scores.begin(),
                                            det.ranked_scores.begin() + need);
                det.warnings.push_back("community extended to include the query vertex");
            } else {
                det.community.members.push_back(s);
                det.community.scores.push_back(0.0);
                det.warnings.push_back("query vertex appended to the community");
            }
        }

        for (Vertex v : det.community.members)
            if (v != s)
                covered.insert(v);
        result.communities.push_back(std::move(det));
    }
    result.om_estimate = result.communities.size();
    return result;
}

} // namespace lscd
