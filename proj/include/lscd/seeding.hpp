#pragma once

#include "lscd/graph.hpp"
#include "lscd/rng.hpp"
#include "lscd/seed_set.hpp"

#include <span>
#include <string>

namespace lscd {

enum class SeedStrategy { random, high_degree, low_degree, high_triangle, low_escape };

const char* seed_strategy_name(SeedStrategy s);
SeedStrategy seed_strategy_from_name(const std::string& name);

/// For every unordered seed pair, add the interior vertices of one
/// (deterministic) shortest path of length <= l as augmented members.
/// l = 1 never adds anything. Unreachable pairs are skipped.
SeedSet strengthen(const Graph& g, const SeedSet& seeds, int l);

/// Draw `count` seeds from community C under a strategy. Rank-based
/// strategies draw uniformly from the top (or bottom) third of C,
/// tercile size ceil(|C|/3), ties broken by id.
SeedSet generate_seeds(const Graph& g, std::span<const Vertex> community, SeedStrategy strategy,
                       std::size_t count, Rng& rng, int escape_steps = 3);

} // namespace lscd
