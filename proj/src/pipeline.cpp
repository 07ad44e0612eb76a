#include "lscd/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace lscd {

namespace {

bool score_improves(Metric m, double candidate, double incumbent) {
    return higher_is_better(m) ? candidate > incumbent : candidate < incumbent;
}

struct Round {
    std::vector<Vertex> ranked; // sample ids
    std::vector<double> y;
    std::size_t cut = 0;
    double score = 0.0;
};

// Rank, truncate and score one LP solution on the sampled graph.
Round make_round(const Graph& sub, const IndicatorSolution& sol, const DetectionParams& params,
                 const std::vector<Vertex>& seed_members, std::vector<std::string>& warnings,
                 int round_no) {
    Round r;
    r.y = sol.y;
    r.ranked = rank_vertices(r.y);

    if (params.truncation == TruncationMode::fixed_size) {
        r.cut = std::min<std::size_t>(params.fixed_size, r.ranked.size());
    } else {
        r.cut = detect_boundary(r.ranked, sub, params.metric, params.gamma);
        if (r.cut < seed_members.size()) {
            // a community smaller than its own seed set is incoherent;
            // extend the prefix until every seed is inside
            std::unordered_set<Vertex> want(seed_members.begin(), seed_members.end());
            std::size_t need = 0;
            for (std::size_t i = 0; i < r.ranked.size() && !want.empty(); ++i) {
                want.erase(r.ranked[i]);
                need = i + 1;
            }
            r.cut = std::max(r.cut, need);
        }
    }

    // seeds ranked below the cut stay out (the LP only pins their support);
    // record them so the caller can see what happened
    {
        std::unordered_set<Vertex> prefix(r.ranked.begin(), r.ranked.begin() + r.cut);
        for (Vertex s : seed_members)
            if (!prefix.count(s))
                warnings.push_back("round " + std::to_string(round_no) + ": seed " +
                                   std::to_string(sub.external_id(s)) + " ranked outside the community");
    }

    std::span<const Vertex> prefix(r.ranked.data(), r.cut);
    CommunityStats stats = community_stats(sub, prefix);
    r.score = metric_value(params.metric, sub, stats, prefix);
    return r;
}

std::vector<double> binary_indicator(const std::vector<Vertex>& members, std::size_t n) {
    std::vector<double> ind(n, 0.0);
    for (Vertex v : members)
        ind[v] = 1.0;
    return ind;
}

DetectionResult detect_impl(const Graph& g, std::span<const Vertex> seeds,
                            const DetectionParams& params) {
    if (seeds.empty())
        throw DataError("detect: empty seed set");
    std::vector<Vertex> seed_list(seeds.begin(), seeds.end());
    std::sort(seed_list.begin(), seed_list.end());
    seed_list.erase(std::unique(seed_list.begin(), seed_list.end()), seed_list.end());
    for (Vertex s : seed_list)
        if (!g.valid(s))
            throw DataError("detect: invalid seed " + std::to_string(s));
    if (params.truncation == TruncationMode::fixed_size && params.fixed_size == 0)
        throw DataError("detect: fixed-size truncation needs a positive size");

    DetectionResult result;

    SampleResult sampled = sample(g, seed_list, params.sample);
    const Graph& sub = sampled.graph;
    const std::size_t n_sub = sub.vertex_count();
    result.sample_size = n_sub;
    result.vertices_touched = sampled.vertices_touched;

    if (n_sub <= sampled.seeds.size()) {
        // nothing beyond the seeds was reachable
        result.warnings.push_back("sample contains no non-seed vertices; returning the seeds");
        result.community.members = seed_list;
        result.community.scores.assign(seed_list.size(), 0.0);
        result.community.metric = params.metric;
        result.ranked = result.community.members;
        result.ranked_scores = result.community.scores;
        return result;
    }

    SeedSet strengthened =
        strengthen(sub, SeedSet::from_vertices(sampled.seeds), params.strengthen_l);
    const std::vector<Vertex>& base_members = strengthened.members;
    const std::size_t base_size = base_members.size();
    const std::vector<double> base_indicator = binary_indicator(base_members, n_sub);

    // round 0: LP over the subspace built from the strengthened seeds
    LocalSubspace subspace = build_subspace(sub, strengthened, params.d, params.k, params.variant);
    if (subspace.rank_reduced)
        result.warnings.push_back(subspace.warning);
    IndicatorSolution sol = solve_indicator_lp(subspace, base_indicator);
    if (sol.status != LpStatus::optimal)
        throw DetectionFailure("detect: LP infeasible in round 0 (seeds outside the diffused region)",
                               0);

    Round current = make_round(sub, sol, params, base_members, result.warnings, 0);
    result.trace.push_back(
        {0, base_size, current.cut, current.score, true, "initial community"});

    const double w1 = 1.0 / static_cast<double>(base_size);
    const double w2 = 0.5 * w1;
    std::size_t prev_expanded = 0;
    for (int round = 1; round <= params.max_reseed_rounds; ++round) {
        // expanded seed set: top |S| + delta*t of the current ranking, united
        // with the strengthened originals
        const std::size_t top =
            std::min<std::size_t>(base_size + static_cast<std::size_t>(params.delta) * round, n_sub);
        std::unordered_set<Vertex> base_set(base_members.begin(), base_members.end());
        SeedSet expanded;
        for (Vertex v : base_members)
            expanded.add(v, w1, true);
        for (std::size_t i = 0; i < top; ++i) {
            Vertex v = current.ranked[i];
            if (!base_set.count(v))
                expanded.add(v, w2, false);
        }
        if (expanded.size() == prev_expanded && top == n_sub)
            break; // the whole sample is already seeded; nothing can change
        prev_expanded = expanded.size();

        LocalSubspace rsub = build_subspace(sub, expanded, params.d, params.k, params.variant);
        IndicatorSolution rsol = solve_reseeded_lp(rsub, base_indicator,
                                                   binary_indicator(expanded.members, n_sub),
                                                   base_size, expanded.size());
        if (rsol.status != LpStatus::optimal) {
            result.trace.push_back({round, expanded.size(), 0, 0.0, false, "LP infeasible"});
            result.warnings.push_back("round " + std::to_string(round) +
                                      ": LP infeasible; keeping the previous community");
            break;
        }

        Round candidate = make_round(sub, rsol, params, base_members, result.warnings, round);
        const bool declined = score_improves(params.metric, current.score, candidate.score);
        result.trace.push_back({round, expanded.size(), candidate.cut, candidate.score, !declined,
                                declined ? "quality declined; stopping" : ""});
        if (declined)
            break;
        current = std::move(candidate);
    }

    // map the winning round back to parent-graph ids
    result.ranked.reserve(current.ranked.size());
    result.ranked_scores.reserve(current.ranked.size());
    for (Vertex v : current.ranked) {
        result.ranked.push_back(sampled.to_parent[v]);
        result.ranked_scores.push_back(current.y[v]);
    }

    Community& c = result.community;
    c.members.assign(result.ranked.begin(), result.ranked.begin() + current.cut);
    c.scores.assign(result.ranked_scores.begin(), result.ranked_scores.begin() + current.cut);
    std::span<const Vertex> prefix(current.ranked.data(), current.cut);
    c.stats = community_stats(sub, prefix);
    c.metric = params.metric;
    c.score = current.score;

    if (params.epsilon && c.stats.d_k > 0 && conductance(c.stats) > *params.epsilon) {
        result.epsilon_rejected = true;
        result.warnings.push_back("community conductance exceeds epsilon filter");
    }
    return result;
}

} // namespace

DetectionResult detect(const Graph& g, std::span<const Vertex> seeds, const DetectionParams& params) {
    return detect_impl(g, seeds, params);
}

DetectionResult detect_fixed_size(const Graph& g, std::span<const Vertex> seeds, std::size_t size,
                                  DetectionParams params) {
    if (size < seeds.size())
        throw DataError("detect_fixed_size: size must be >= the seed count");
    params.truncation = TruncationMode::fixed_size;
    params.fixed_size = size;
    return detect_impl(g, seeds, params);
}

} // namespace lscd
