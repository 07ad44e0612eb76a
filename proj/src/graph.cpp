#include "lscd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace lscd {

namespace {

// Parses "u v" with arbitrary whitespace; returns false on malformed input.
bool parse_edge_line(const std::string& line, ExternalId& u, ExternalId& v) {
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r'))
            ++p;
    };
    skip_ws();
    auto r1 = std::from_chars(p, end, u);
    if (r1.ec != std::errc{})
        return false;
    p = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(p, end, v);
    if (r2.ec != std::errc{})
        return false;
    p = r2.ptr;
    skip_ws();
    return p == end; // exactly two fields
}

} // namespace

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj, std::vector<ExternalId> ext_ids) {
    const std::size_t n = adj.size();
    if (ext_ids.size() != n)
        throw DataError("from_adjacency: external id count mismatch");
    // symmetrize and drop self loops; finalize dedups
    for (Vertex v = 0; v < n; ++v) {
        auto& list = adj[v];
        list.erase(std::remove(list.begin(), list.end(), v), list.end());
        for (Vertex w : list) {
            if (w >= n)
                throw DataError("from_adjacency: neighbor out of range");
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t original = adj[v].size();
        for (std::size_t i = 0; i < original; ++i)
            adj[adj[v][i]].push_back(v); // reverse direction; finalize dedups
    }
    return finalize(std::move(adj), std::move(ext_ids));
}

Graph Graph::finalize(std::vector<std::vector<Vertex>>&& adj, std::vector<ExternalId>&& ext) {
    Graph g;
    const std::size_t n = adj.size();
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adj[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.offsets_[v + 1] = g.offsets_[v] + list.size();
    }
    g.adjacency_.reserve(g.offsets_[n]);
    for (auto& list : adj)
        g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
    g.ext_ids_ = std::move(ext);
    g.ext_to_int_.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        g.ext_to_int_.emplace(g.ext_ids_[v], static_cast<Vertex>(v));
    return g;
}

Graph Graph::load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open edge list: " + path);

    std::vector<std::pair<ExternalId, ExternalId>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        ExternalId u, v;
        if (!parse_edge_line(line, u, v))
            throw DataError(path + ":" + std::to_string(line_no) + ": malformed edge line");
        edges.emplace_back(u, v);
    }
    if (in.bad())
        throw DataError("I/O error while reading " + path);
    if (edges.empty())
        throw DataError(path + ": empty graph (no edges)");
    return from_external_edges(edges);
}

Graph Graph::from_external_edges(std::span<const std::pair<ExternalId, ExternalId>> edges) {
    std::unordered_map<ExternalId, Vertex> remap;
    std::vector<ExternalId> ext;
    auto intern = [&](ExternalId id) {
        auto [it, inserted] = remap.emplace(id, static_cast<Vertex>(ext.size()));
        if (inserted)
            ext.push_back(id);
        return it->second;
    };

    std::vector<std::vector<Vertex>> adj;
    for (auto [eu, ev] : edges) {
        Vertex u = intern(eu);
        Vertex v = intern(ev);
        if (adj.size() < ext.size())
            adj.resize(ext.size());
        if (u == v)
            continue; // self loops are virtual, never stored
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    adj.resize(ext.size());
    if (ext.empty())
        throw DataError("empty graph");
    return finalize(std::move(adj), std::move(ext));
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw DataError("edge endpoint out of range");
        if (u == v)
            continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<ExternalId> ext(n);
    for (std::size_t v = 0; v < n; ++v)
        ext[v] = static_cast<ExternalId>(v);
    return finalize(std::move(adj), std::move(ext)); // already symmetric
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Vertex> Graph::find_external(ExternalId id) const {
    auto it = ext_to_int_.find(id);
    if (it == ext_to_int_.end())
        return std::nullopt;
    return it->second;
}

Graph Graph::without_edges_at(Vertex s, std::span<const Vertex> kept) const {
    if (!valid(s))
        throw DataError("without_edges_at: invalid vertex");
    std::vector<Vertex> keep(kept.begin(), kept.end());
    std::sort(keep.begin(), keep.end());

    const std::size_t n = vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = neighbors(v);
        auto& out = adj[v];
        out.reserve(nb.size());
        for (Vertex w : nb) {
            if (v == s && !std::binary_search(keep.begin(), keep.end(), w))
                continue;
            if (w == s && !std::binary_search(keep.begin(), keep.end(), v))
                continue;
            out.push_back(w);
        }
    }
    std::vector<ExternalId> ext = ext_ids_;
    return finalize(std::move(adj), std::move(ext));
}

SubgraphResult induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.empty())
        throw DataError("induced_subgraph: empty vertex set");
    std::vector<Vertex> members(vertices.begin(), vertices.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Vertex v : members)
        if (!g.valid(v))
            throw DataError("induced_subgraph: invalid vertex " + std::to_string(v));

    std::unordered_map<Vertex, Vertex> to_sub;
    to_sub.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        to_sub.emplace(members[i], static_cast<Vertex>(i));

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Vertex w : g.neighbors(members[i])) {
            auto it = to_sub.find(w);
            if (it != to_sub.end() && members[i] < w)
                edges.emplace_back(static_cast<Vertex>(i), it->second);
        }
    }

    std::vector<std::vector<Vertex>> adj(members.size());
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<ExternalId> ext(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        ext[i] = g.external_id(members[i]);

    SubgraphResult res;
    res.to_parent = std::move(members);
    res.graph = Graph::from_adjacency(std::move(adj), std::move(ext));
    return res;
}

std::vector<std::vector<Vertex>> ego_components(const Graph& g, Vertex s) {
    if (!g.valid(s))
        throw DataError("ego_components: invalid vertex");
    auto nb = g.neighbors(s);
    if (nb.empty())
        return {};

    std::unordered_map<Vertex, std::size_t> local;
    local.reserve(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i)
        local.emplace(nb[i], i);

    std::vector<int> comp(nb.size(), -1);
    int n_comp = 0;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        if (comp[i] >= 0)
            continue;
        comp[i] = n_comp;
        stack.assign(1, i);
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(nb[cur])) {
                auto it = local.find(w);
                if (it != local.end() && comp[it->second] < 0) {
                    comp[it->second] = n_comp;
                    stack.push_back(it->second);
                }
            }
        }
        ++n_comp;
    }

    std::vector<std::vector<Vertex>> comps(n_comp);
    for (std::size_t i = 0; i < nb.size(); ++i)
        comps[comp[i]].push_back(nb[i]);
    for (auto& c : comps)
        std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

} // namespace lscd
