#include "lscd/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace lscd {

bool higher_is_better(Metric m) { return m != Metric::cond; }

const char* metric_name(Metric m) {
    switch (m) {
    case Metric::mod: return "mod";
    case Metric::nmod: return "nmod";
    case Metric::cond: return "cond";
    case Metric::tpr: return "tpr";
    case Metric::tpn: return "tpn";
    }
    return "?";
}

Metric metric_from_name(const std::string& name) {
    if (name == "mod") return Metric::mod;
    if (name == "nmod") return Metric::nmod;
    if (name == "cond") return Metric::cond;
    if (name == "tpr") return Metric::tpr;
    if (name == "tpn") return Metric::tpn;
    throw DataError("unknown metric: " + name);
}

namespace {

void check_community(const Graph& g, std::span<const Vertex> community, const char* what) {
    if (community.empty())
        throw DataError(std::string(what) + ": empty community");
    for (Vertex v : community)
        if (!g.valid(v))
            throw DataError(std::string(what) + ": invalid vertex");
}

} // namespace

CommunityStats community_stats(const Graph& g, std::span<const Vertex> community) {
    check_community(g, community, "community_stats");
    std::unordered_set<Vertex> in(community.begin(), community.end());

    CommunityStats s;
    s.n_k = in.size();
    s.m = g.edge_count();
    for (Vertex v : in) {
        s.d_k += g.degree(v);
        std::vector<Vertex> member_nb;
        for (Vertex w : g.neighbors(v))
            if (in.count(w))
                member_nb.push_back(w);
        s.e_kk += member_nb.size(); // both directions counted; halved below
        for (std::size_t i = 0; i < member_nb.size(); ++i)
            for (std::size_t j = i + 1; j < member_nb.size(); ++j)
                if (g.has_edge(member_nb[i], member_nb[j]))
                    ++s.triangle_sum; // edge of v's restricted ego net
    }
    s.e_kk /= 2;
    return s;
}

double modularity(const CommunityStats& s) {
    if (s.m == 0)
        throw DataError("modularity: graph has no edges");
    const double m = static_cast<double>(s.m);
    const double frac = static_cast<double>(s.d_k) / (2.0 * m);
    return static_cast<double>(s.e_kk) / m - frac * frac;
}

double normalized_modularity(const CommunityStats& s) {
    if (s.d_k == 0)
        return 0.0; // isolated community, defined as 0
    return static_cast<double>(s.e_kk) / (static_cast<double>(s.d_k) * static_cast<double>(s.d_k));
}

double conductance(const CommunityStats& s) {
    if (s.d_k == 0)
        throw DataError("conductance: community has zero volume");
    return 1.0 - 2.0 * static_cast<double>(s.e_kk) / static_cast<double>(s.d_k);
}

double tpr(const Graph& g, std::span<const Vertex> community) {
    check_community(g, community, "tpr");
    std::unordered_set<Vertex> in(community.begin(), community.end());
    std::size_t in_triad = 0;
    for (Vertex v : in) {
        std::vector<Vertex> member_nb;
        for (Vertex w : g.neighbors(v))
            if (in.count(w))
                member_nb.push_back(w);
        bool found = false;
        for (std::size_t i = 0; i < member_nb.size() && !found; ++i)
            for (std::size_t j = i + 1; j < member_nb.size() && !found; ++j)
                found = g.has_edge(member_nb[i], member_nb[j]);
        if (found)
            ++in_triad;
    }
    return static_cast<double>(in_triad) / static_cast<double>(in.size());
}

double tpn(const Graph& g, std::span<const Vertex> community) {
    CommunityStats s = community_stats(g, community);
    return static_cast<double>(s.triangle_sum) / (3.0 * static_cast<double>(s.n_k));
}

double cohesive_degree(const Graph& g, Vertex s, std::span<const Vertex> community) {
    check_community(g, community, "cohesive_degree");
    std::unordered_set<Vertex> in(community.begin(), community.end());
    if (!in.count(s))
        throw DataError("cohesive_degree: s not in community");
    std::size_t internal = 0, external = 0;
    for (Vertex w : g.neighbors(s))
        (in.count(w) ? internal : external)++;
    if (internal == 0)
        return 0.0;
    if (external == 0)
        return std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(g.vertex_count());
    const double n_k = static_cast<double>(in.size());
    return (static_cast<double>(internal) / n_k) / (static_cast<double>(external) / n);
}

double metric_value(Metric m, const Graph& g, const CommunityStats& s,
                    std::span<const Vertex> community) {
    switch (m) {
    case Metric::mod: return modularity(s);
    case Metric::nmod: return normalized_modularity(s);
    case Metric::cond: return conductance(s);
    case Metric::tpr: return tpr(g, community);
    case Metric::tpn: return tpn(g, community);
    }
    throw DataError("metric_value: unknown metric");
}

PrefixScorer::PrefixScorer(const Graph& g, Metric metric)
    : g_(g), metric_(metric),
      track_triangles_(metric == Metric::tpr || metric == Metric::tpn),
      in_set_(g.vertex_count(), 0) {
    stats_.m = g.edge_count();
    if (track_triangles_)
        triangles_of_.assign(g.vertex_count(), 0);
}

void PrefixScorer::add(Vertex v) {
    in_set_[v] = 1;
    ++stats_.n_k;
    stats_.d_k += g_.degree(v);
    std::vector<Vertex> member_nb;
    for (Vertex w : g_.neighbors(v))
        if (in_set_[w])
            member_nb.push_back(w);
    stats_.e_kk += member_nb.size();
    if (!track_triangles_)
        return;
    for (std::size_t i = 0; i < member_nb.size(); ++i) {
        for (std::size_t j = i + 1; j < member_nb.size(); ++j) {
            if (!g_.has_edge(member_nb[i], member_nb[j]))
                continue;
            stats_.triangle_sum += 3;
            for (Vertex t : {v, member_nb[i], member_nb[j]})
                if (triangles_of_[t]++ == 0)
                    ++members_in_triads_;
        }
    }
}

double PrefixScorer::value() const {
    switch (metric_) {
    case Metric::mod:
        return modularity(stats_);
    case Metric::nmod:
        return normalized_modularity(stats_);
    case Metric::cond:
        // zero-volume prefixes cannot qualify; report the worst value
        return stats_.d_k == 0 ? std::numeric_limits<double>::infinity() : conductance(stats_);
    case Metric::tpr:
        return static_cast<double>(members_in_triads_) / static_cast<double>(stats_.n_k);
    case Metric::tpn:
        return static_cast<double>(stats_.triangle_sum) / (3.0 * static_cast<double>(stats_.n_k));
    }
    throw DataError("PrefixScorer: unknown metric");
}

std::size_t boundary_rule(std::span<const double> values, std::size_t i_min, double gamma,
                          bool lower_better) {
    if (values.empty())
        throw DataError("boundary_rule: no values");
    const std::size_t len = values.size();

    // first index where the curve turns, preceded by a qualifying gamma gap
    bool have_extreme = std::isfinite(values[0]);
    double extreme_before = values[0]; // max so far (lower-better) or min so far
    for (std::size_t j = 1; j + 1 < len; ++j) {
        if (std::isfinite(values[j])) {
            const bool turns = lower_better ? values[j + 1] > values[j] : values[j + 1] < values[j];
            const bool gap = have_extreme && (lower_better ? extreme_before >= gamma * values[j]
                                                           : values[j] >= gamma * extreme_before);
            if (turns && gap)
                return i_min + j;
            if (have_extreme)
                extreme_before = lower_better ? std::max(extreme_before, values[j])
                                              : std::min(extreme_before, values[j]);
            else {
                extreme_before = values[j];
                have_extreme = true;
            }
        }
    }

    // fallback: global optimum over the scanned range (first occurrence)
    std::size_t best = 0;
    for (std::size_t j = 1; j < len; ++j) {
        const bool better = lower_better ? values[j] < values[best] : values[j] > values[best];
        if (better)
            best = j;
    }
    return i_min + best;
}

std::size_t detect_boundary(std::span<const Vertex> ordered, const Graph& g, Metric metric,
                            double gamma) {
    if (ordered.empty())
        throw DataError("detect_boundary: empty ranking");
    if (gamma < 1.0)
        throw DataError("detect_boundary: gamma must be >= 1");
    const std::size_t n = ordered.size();
    const std::size_t i_min = std::min<std::size_t>(2, n);

    PrefixScorer scorer(g, metric);
    std::vector<double> values;
    values.reserve(n - i_min + 1);
    std::size_t size = 0;
    for (Vertex v : ordered) {
        scorer.add(v);
        ++size;
        if (size >= i_min)
            values.push_back(scorer.value());
    }
    return boundary_rule(values, i_min, gamma, !higher_is_better(metric));
}

} // namespace lscd
