#include "lscd/seeding.hpp"

#include "lscd/spectral.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace lscd {

const char* seed_strategy_name(SeedStrategy s) {
    switch (s) {
    case SeedStrategy::random: return "random";
    case SeedStrategy::high_degree: return "high-degree";
    case SeedStrategy::low_degree: return "low-degree";
    case SeedStrategy::high_triangle: return "high-triangle";
    case SeedStrategy::low_escape: return "low-escape";
    }
    return "?";
}

SeedStrategy seed_strategy_from_name(const std::string& name) {
    if (name == "random") return SeedStrategy::random;
    if (name == "high-degree") return SeedStrategy::high_degree;
    if (name == "low-degree") return SeedStrategy::low_degree;
    if (name == "high-triangle") return SeedStrategy::high_triangle;
    if (name == "low-escape") return SeedStrategy::low_escape;
    throw DataError("unknown seed strategy: " + name);
}

namespace {

// BFS from `from` with neighbor expansion in id order; parents give one
// deterministic shortest path per reachable target.
void bfs_parents(const Graph& g, Vertex from, std::unordered_map<Vertex, Vertex>& parent,
                 std::unordered_map<Vertex, int>& dist) {
    parent.clear();
    dist.clear();
    parent.emplace(from, from);
    dist.emplace(from, 0);
    std::vector<Vertex> queue{from};
    std::size_t head = 0;
    while (head < queue.size()) {
        Vertex v = queue[head++];
        int dv = dist[v];
        for (Vertex w : g.neighbors(v)) {
            if (parent.emplace(w, v).second) {
                dist.emplace(w, dv + 1);
                queue.push_back(w);
            }
        }
    }
}

} // namespace

SeedSet strengthen(const Graph& g, const SeedSet& seeds, int l) {
    if (l < 1)
        throw DataError("strengthen: l must be >= 1");
    for (Vertex v : seeds.members)
        if (!g.valid(v))
            throw DataError("strengthen: seed outside graph");

    SeedSet out = seeds;
    std::unordered_set<Vertex> present(seeds.members.begin(), seeds.members.end());

    std::vector<Vertex> originals(seeds.members.begin(), seeds.members.end());
    std::sort(originals.begin(), originals.end());

    std::unordered_map<Vertex, Vertex> parent;
    std::unordered_map<Vertex, int> dist;
    std::vector<Vertex> added;
    for (std::size_t i = 0; i < originals.size(); ++i) {
        bfs_parents(g, originals[i], parent, dist);
        for (std::size_t j = i + 1; j < originals.size(); ++j) {
            auto it = dist.find(originals[j]);
            if (it == dist.end() || it->second > l)
                continue;
            // interior vertices of the path originals[j] -> originals[i]
            Vertex cur = parent[originals[j]];
            while (cur != originals[i]) {
                added.push_back(cur);
                cur = parent[cur];
            }
        }
    }
    std::sort(added.begin(), added.end());
    added.erase(std::unique(added.begin(), added.end()), added.end());
    for (Vertex v : added)
        if (present.insert(v).second)
            out.add(v, 1.0, false);
    return out;
}

namespace {

// top tercile (ceil(|C|/3)) of the community under `better`, extended past
// the tercile boundary when more seeds are requested than it holds
std::vector<Vertex> ranked_pool(std::vector<Vertex> community, std::size_t count,
                                const std::function<bool(Vertex, Vertex)>& better) {
    std::sort(community.begin(), community.end(), better);
    std::size_t tercile = (community.size() + 2) / 3;
    std::size_t pool = std::max(tercile, std::min(count, community.size()));
    community.resize(pool);
    return community;
}

} // namespace

SeedSet generate_seeds(const Graph& g, std::span<const Vertex> community, SeedStrategy strategy,
                       std::size_t count, Rng& rng, int escape_steps) {
    if (community.empty())
        throw DataError("generate_seeds: empty community");
    if (count > community.size())
        throw DataError("generate_seeds: asked for more seeds than community members");
    for (Vertex v : community)
        if (!g.valid(v))
            throw DataError("generate_seeds: invalid vertex");

    std::vector<Vertex> members(community.begin(), community.end());
    std::sort(members.begin(), members.end());

    std::vector<Vertex> pool;
    switch (strategy) {
    case SeedStrategy::random:
        pool = members;
        break;
    case SeedStrategy::high_degree:
        pool = ranked_pool(members, count, [&](Vertex a, Vertex b) {
            if (g.degree(a) != g.degree(b))
                return g.degree(a) > g.degree(b);
            return a < b;
        });
        break;
    case SeedStrategy::low_degree:
        pool = ranked_pool(members, count, [&](Vertex a, Vertex b) {
            if (g.degree(a) != g.degree(b))
                return g.degree(a) < g.degree(b);
            return a < b;
        });
        break;
    case SeedStrategy::high_triangle: {
        std::unordered_set<Vertex> in(members.begin(), members.end());
        std::unordered_map<Vertex, std::size_t> tri;
        for (Vertex v : members) {
            std::vector<Vertex> nb;
            for (Vertex w : g.neighbors(v))
                if (in.count(w))
                    nb.push_back(w);
            std::size_t t = 0;
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (g.has_edge(nb[i], nb[j]))
                        ++t;
            tri[v] = t;
        }
        pool = ranked_pool(members, count, [&](Vertex a, Vertex b) {
            if (tri[a] != tri[b])
                return tri[a] > tri[b];
            return a < b;
        });
        break;
    }
    case SeedStrategy::low_escape: {
        // probability retained inside C after a few walk steps from each
        // single vertex; higher retention ranks first
        std::unordered_set<Vertex> in(members.begin(), members.end());
        std::unordered_map<Vertex, double> retained;
        for (Vertex v : members) {
            SeedSet single = SeedSet::from_vertices({v});
            std::vector<double> p = initial_probability(single, g.vertex_count());
            for (int t = 0; t < escape_steps; ++t)
                p = walk_step(g, WalkVariant::rw, p);
            double r = 0.0;
            for (Vertex c : members)
                r += p[c];
            retained[v] = r;
        }
        pool = ranked_pool(members, count, [&](Vertex a, Vertex b) {
            if (retained[a] != retained[b])
                return retained[a] > retained[b];
            return a < b;
        });
        break;
    }
    }

    std::vector<Vertex> chosen = rng.sample_without_replacement(pool, count);
    std::sort(chosen.begin(), chosen.end());
    return SeedSet::from_vertices(chosen);
}

} // namespace lscd
