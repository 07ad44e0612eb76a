#pragma once

#include "lscd/graph.hpp"
#include "lscd/matrix.hpp"
#include "lscd/seed_set.hpp"

#include <span>
#include <string>
#include <vector>

namespace lscd {

/// Random-walk operator on the self-loop-augmented graph. Neither variant
/// is ever materialized; both are applied through adjacency traversal with
/// effective degree deg(v)+1.
///   rw:  row-stochastic D^-1 A'
///   sym: symmetric D^-1/2 A' D^-1/2 (probability steps renormalize to
///        unit 1-norm)
enum class WalkVariant { rw, sym };

const char* walk_variant_name(WalkVariant v);
WalkVariant walk_variant_from_name(const std::string& name);

/// Column-orthonormal basis of the local invariant subspace approximation.
struct LocalSubspace {
    Matrix basis;            // n_sub x dim, column-orthonormal
    int requested_dim = 0;   // d as asked for
    int iterations = 0;      // k
    WalkVariant variant = WalkVariant::rw;
    bool rank_reduced = false;
    std::string warning;

    std::size_t dim() const { return basis.cols; }
    std::size_t size() const { return basis.rows; }
};

/// Probability mass concentrated on the seeds, proportional to their
/// weights and normalized to sum 1.
std::vector<double> initial_probability(const SeedSet& seeds, std::size_t n);

/// One probability step. rw preserves the unit 1-norm by construction;
/// sym renormalizes to unit 1-norm after applying the operator.
std::vector<double> walk_step(const Graph& g, WalkVariant variant, const std::vector<double>& p);

/// Raw operator application (no renormalization); the building block for
/// subspace iteration and the conjugation identity between the variants.
void apply_walk_operator(const Graph& g, WalkVariant variant, std::span<const double> in,
                         std::span<double> out);

/// Column-orthonormal basis spanning the numerical column space of m.
/// Columns that fall below the rank tolerance (1e-12) are dropped.
/// Throws DataError when every column is numerically zero.
Matrix orthonormalize(const Matrix& m);

/// Local spectral basis: orthonormalize the first d walk vectors, then run
/// k subspace iterations (apply operator columnwise, re-orthonormalize).
LocalSubspace build_subspace(const Graph& g, const SeedSet& seeds, int d, int k,
                             WalkVariant variant);

} // namespace lscd
