#pragma once

#include "lscd/spectral.hpp"

#include <span>
#include <vector>

namespace lscd {

enum class LpStatus {
    optimal,
    infeasible, // no y in span(V) with y >= 0 and the seed mass constraints
    unbounded,  // degenerate basis; cannot happen for a well-formed instance
};

/// Solution of a minimum-l1-norm indicator problem over a subspace basis.
/// y = V x, entries clamped to 0 when within -1e-8 of zero; anything more
/// negative is treated as a solver failure.
struct IndicatorSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> y; // per-vertex likelihood, >= 0
    std::vector<double> x; // coordinates in the basis
    double objective = 0.0; // sum of y
};

/// min sum(y) s.t. y = Vx, y >= 0, s.y >= 1. Solved on the d-variable
/// reformulation: min (V^T 1).x s.t. -Vx <= 0 (n rows), -(V^T s).x <= -1.
IndicatorSolution solve_indicator_lp(const LocalSubspace& subspace, std::span<const double> seed_indicator);

/// The reseeding variant: adds s_t.y >= 1 + w2*(|S_t| - |S|) with
/// w1 = 1/|S| and w2 = w1/2, keeping the original seed constraint.
IndicatorSolution solve_reseeded_lp(const LocalSubspace& subspace, std::span<const double> seed_indicator,
                                    std::span<const double> expanded_indicator, std::size_t seed_count,
                                    std::size_t expanded_count);

/// Vertices sorted by score descending, ties broken by smaller id.
std::vector<Vertex> rank_vertices(std::span<const double> y);

} // namespace lscd
