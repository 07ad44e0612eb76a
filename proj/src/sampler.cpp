#include "lscd/sampler.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace lscd {

namespace {

struct FrontierEntry {
    Vertex v;
    double inward_ratio;
    std::uint32_t degree;
};

} // namespace

SampleResult sample(const Graph& g, std::span<const Vertex> seeds, const SampleParams& params) {
    if (seeds.empty())
        throw DataError("sample: empty seed set");
    for (Vertex s : seeds)
        if (!g.valid(s))
            throw DataError("sample: invalid seed " + std::to_string(s));
    if (params.radius < 1 || params.outdegree_cap < 1 || params.frontier_cap < 1)
        throw DataError("sample: radius and caps must be >= 1");

    std::unordered_set<Vertex> picked(seeds.begin(), seeds.end());
    std::unordered_set<Vertex> touched;

    for (Vertex s : seeds) {
        // per-seed BFS ball up to depth radius
        std::unordered_map<Vertex, int> depth;
        depth.emplace(s, 0);
        std::vector<Vertex> queue{s};
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            int dv = depth[v];
            if (dv == params.radius)
                continue;
            for (Vertex w : g.neighbors(v)) {
                if (depth.emplace(w, dv + 1).second)
                    queue.push_back(w);
            }
        }

        std::vector<FrontierEntry> frontier;
        for (Vertex v : queue) {
            touched.insert(v);
            int dv = depth[v];
            if (dv < params.radius) {
                picked.insert(v); // interior is never filtered
            } else {
                std::uint32_t deg = g.degree(v);
                if (deg > params.outdegree_cap)
                    continue;
                std::uint32_t inward = 0;
                for (Vertex w : g.neighbors(v))
                    if (depth.count(w))
                        ++inward;
                frontier.push_back({v, deg ? double(inward) / double(deg) : 0.0, deg});
            }
        }
        std::sort(frontier.begin(), frontier.end(), [](const FrontierEntry& a, const FrontierEntry& b) {
            if (a.inward_ratio != b.inward_ratio)
                return a.inward_ratio > b.inward_ratio;
            if (a.degree != b.degree)
                return a.degree > b.degree;
            return a.v < b.v;
        });
        if (frontier.size() > params.frontier_cap)
            frontier.resize(params.frontier_cap);
        for (const auto& f : frontier)
            picked.insert(f.v);
    }

    std::vector<Vertex> members(picked.begin(), picked.end());
    std::sort(members.begin(), members.end());
    SubgraphResult sub = induced_subgraph(g, members);

    SampleResult res;
    res.graph = std::move(sub.graph);
    res.to_parent = std::move(sub.to_parent);
    res.vertices_touched = touched.size();
    res.seeds.reserve(seeds.size());
    for (Vertex s : seeds) {
        auto it = std::lower_bound(res.to_parent.begin(), res.to_parent.end(), s);
        res.seeds.push_back(static_cast<Vertex>(it - res.to_parent.begin()));
    }
    std::sort(res.seeds.begin(), res.seeds.end());
    res.seeds.erase(std::unique(res.seeds.begin(), res.seeds.end()), res.seeds.end());
    return res;
}

double coverage_ratio(std::span<const Vertex> sampled, std::span<const Vertex> truth) {
    if (truth.empty())
        throw DataError("coverage_ratio: empty truth set");
    std::unordered_set<Vertex> in_sample(sampled.begin(), sampled.end());
    std::size_t hit = 0;
    for (Vertex v : truth)
        if (in_sample.count(v))
            ++hit;
    return double(hit) / double(truth.size());
}

} // namespace lscd
