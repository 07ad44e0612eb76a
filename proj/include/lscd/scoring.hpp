#pragma once

#include "lscd/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace lscd {

enum class Metric { mod, nmod, cond, tpr, tpn };

/// cond improves downward; the other four improve upward.
bool higher_is_better(Metric m);
const char* metric_name(Metric m);
Metric metric_from_name(const std::string& name);

/// Counts describing one community inside its scoring graph. triangle_sum
/// is sum over members of the edge count of their community-restricted
/// ego nets, i.e. 3x the number of internal triangles.
struct CommunityStats {
    std::size_t n_k = 0;          // member count
    std::size_t e_kk = 0;         // internal edges
    std::size_t d_k = 0;          // total degree of members
    std::size_t m = 0;            // scoring-graph edge count
    std::size_t triangle_sum = 0; // 3 * internal triangles
};

CommunityStats community_stats(const Graph& g, std::span<const Vertex> community);

double modularity(const CommunityStats& s);            // e_kk/m - (d_k/2m)^2
double normalized_modularity(const CommunityStats& s); // e_kk/d_k^2, 0 for isolated
double conductance(const CommunityStats& s);           // 1 - 2 e_kk/d_k

/// Fraction of members that belong to at least one triangle fully inside
/// the community.
double tpr(const Graph& g, std::span<const Vertex> community);

/// Internal triangles per member.
double tpn(const Graph& g, std::span<const Vertex> community);

/// (e_sk/n_k)/(e_s!k/n); +infinity when s has no external edge.
double cohesive_degree(const Graph& g, Vertex s, std::span<const Vertex> community);

double metric_value(Metric m, const Graph& g, const CommunityStats& s,
                    std::span<const Vertex> community);

/// Incrementally maintained statistics over a growing prefix of a ranked
/// vertex list. Triangle bookkeeping is only done when the metric needs it.
class PrefixScorer {
public:
    PrefixScorer(const Graph& g, Metric metric);
    void add(Vertex v);
    double value() const;
    const CommunityStats& stats() const { return stats_; }

private:
    const Graph& g_;
    Metric metric_;
    bool track_triangles_;
    CommunityStats stats_;
    std::vector<std::uint8_t> in_set_;
    std::vector<std::uint32_t> triangles_of_; // per member, internal triangle count
    std::size_t members_in_triads_ = 0;
};

/// First local optimum of the metric along ranked prefixes, qualified by
/// the gamma drop rule; falls back to the global optimum of the scanned
/// range when no prefix qualifies. Returns the chosen prefix length.
std::size_t detect_boundary(std::span<const Vertex> ordered, const Graph& g, Metric metric,
                            double gamma);

/// The rule itself, on a precomputed value sequence where values[j] is the
/// metric at prefix size i_min + j.
std::size_t boundary_rule(std::span<const double> values, std::size_t i_min, double gamma,
                          bool lower_better);

} // namespace lscd
