#pragma once

#include "lscd/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lscd {

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Duplicate edges and self loops are dropped at construction. Internal ids
/// are contiguous 0..n-1; external_id() maps back to the ids found in the
/// source file. Read-only after construction, so a single Graph can be
/// shared by any number of concurrent detections.
class Graph {
public:
    Graph() = default;

    /// Parse a SNAP-style edge list: "u v" per line, '#' starts a comment.
    /// Throws DataError on I/O failure, malformed lines (with the line
    /// number), or an empty graph.
    static Graph load_edge_list(const std::string& path);

    /// Build from external-id pairs; ids are remapped in order of first
    /// appearance.
    static Graph from_external_edges(std::span<const std::pair<ExternalId, ExternalId>> edges);

    /// Build over a fixed vertex set 0..n-1 (external id = internal id);
    /// vertices without edges stay isolated.
    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

    /// Build from per-vertex neighbor lists (deduplicated and sorted here)
    /// with caller-provided external ids. Lists may be asymmetric on input;
    /// each mentioned edge is stored in both directions.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adj,
                                std::vector<ExternalId> ext_ids);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::uint32_t degree(Vertex v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    bool has_edge(Vertex u, Vertex v) const;
    bool valid(Vertex v) const { return v < vertex_count(); }

    ExternalId external_id(Vertex v) const { return ext_ids_[v]; }
    const std::vector<ExternalId>& external_ids() const { return ext_ids_; }
    std::optional<Vertex> find_external(ExternalId id) const;

    /// Copy of this graph keeping, among s's edges, only those to `kept`.
    /// Everything else is untouched; used to isolate one ego component.
    Graph without_edges_at(Vertex s, std::span<const Vertex> kept) const;

private:
    static Graph finalize(std::vector<std::vector<Vertex>>&& adj, std::vector<ExternalId>&& ext);

    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_; // sorted within each vertex
    std::vector<ExternalId> ext_ids_;
    std::unordered_map<ExternalId, Vertex> ext_to_int_;
};

struct SubgraphResult {
    Graph graph;
    std::vector<Vertex> to_parent; // subgraph id -> parent id
};

/// Subgraph induced on `vertices` (deduplicated, sorted by parent id).
/// External ids carry over from the parent graph.
SubgraphResult induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components of the subgraph induced on adj(s), sorted by size
/// descending, ties by smallest member id. Empty for an isolated vertex.
std::vector<std::vector<Vertex>> ego_components(const Graph& g, Vertex s);

} // namespace lscd
