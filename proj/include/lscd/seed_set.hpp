#pragma once

#include "lscd/types.hpp"

#include <vector>

namespace lscd {

/// Seed vertices with per-member weights. Originals are the user-supplied
/// seeds; strengthening and reseeding append augmented members (original =
/// false), typically at reduced weight.
struct SeedSet {
    std::vector<Vertex> members;
    std::vector<double> weights;
    std::vector<std::uint8_t> original;

    static SeedSet from_vertices(const std::vector<Vertex>& vs, double weight = 1.0) {
        SeedSet s;
        s.members = vs;
        s.weights.assign(vs.size(), weight);
        s.original.assign(vs.size(), 1);
        return s;
    }

    std::size_t size() const { return members.size(); }
    bool contains(Vertex v) const {
        for (Vertex m : members)
            if (m == v)
                return true;
        return false;
    }
    void add(Vertex v, double weight, bool is_original) {
        members.push_back(v);
        weights.push_back(weight);
        original.push_back(is_original ? 1 : 0);
    }
};

} // namespace lscd
