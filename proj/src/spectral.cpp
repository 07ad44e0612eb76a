#include "lscd/spectral.hpp"

#include "lscd/kernels.hpp"

#include <cmath>

namespace lscd {

const char* walk_variant_name(WalkVariant v) {
    return v == WalkVariant::rw ? "rw" : "sym";
}

WalkVariant walk_variant_from_name(const std::string& name) {
    if (name == "rw")
        return WalkVariant::rw;
    if (name == "sym")
        return WalkVariant::sym;
    throw DataError("unknown walk variant: " + name);
}

std::vector<double> initial_probability(const SeedSet& seeds, std::size_t n) {
    if (seeds.members.empty())
        throw DataError("initial_probability: empty seed set");
    double total = 0.0;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (seeds.members[i] >= n)
            throw DataError("initial_probability: seed outside graph");
        if (!(seeds.weights[i] > 0.0))
            throw DataError("initial_probability: non-positive seed weight");
        total += seeds.weights[i];
    }
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < seeds.size(); ++i)
        p[seeds.members[i]] += seeds.weights[i] / total;
    return p;
}

void apply_walk_operator(const Graph& g, WalkVariant variant, std::span<const double> in,
                         std::span<double> out) {
    const std::size_t n = g.vertex_count();
    // q = in scaled by the source normalization, then gather over adjacency
    // (the virtual self loop contributes q[v] to out[v])
    std::vector<double> q(n);
    if (variant == WalkVariant::rw) {
        for (std::size_t v = 0; v < n; ++v)
            q[v] = in[v] / (g.degree(static_cast<Vertex>(v)) + 1.0);
        for (std::size_t v = 0; v < n; ++v) {
            double acc = q[v];
            for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
                acc += q[w];
            out[v] = acc;
        }
    } else {
        for (std::size_t v = 0; v < n; ++v)
            q[v] = in[v] / std::sqrt(g.degree(static_cast<Vertex>(v)) + 1.0);
        for (std::size_t v = 0; v < n; ++v) {
            double acc = q[v];
            for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
                acc += q[w];
            out[v] = acc / std::sqrt(g.degree(static_cast<Vertex>(v)) + 1.0);
        }
    }
}

std::vector<double> walk_step(const Graph& g, WalkVariant variant, const std::vector<double>& p) {
    const std::size_t n = g.vertex_count();
    if (p.size() != n)
        throw DataError("walk_step: probability vector size mismatch");
    std::vector<double> next(n);
    apply_walk_operator(g, variant, p, next);
    if (variant == WalkVariant::sym) {
        double norm = kernels::sum(next.data(), n);
        if (norm > 0.0)
            kernels::scale(next.data(), 1.0 / norm, n);
    }
    return next;
}

Matrix orthonormalize(const Matrix& m) {
    if (m.cols < 1 || m.rows < m.cols)
        throw DataError("orthonormalize: need n >= d >= 1");
    constexpr double kRankTol = 1e-12;
    const std::size_t n = m.rows;

    Matrix q(n, m.cols);
    std::size_t kept = 0;
    std::vector<double> v(n);
    for (std::size_t j = 0; j < m.cols; ++j) {
        std::copy(m.col(j), m.col(j) + n, v.begin());
        // modified Gram-Schmidt with one reorthogonalization pass
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < kept; ++i) {
                double proj = kernels::dot(q.col(i), v.data(), n);
                kernels::axpy(v.data(), -proj, q.col(i), n);
            }
        }
        double norm = std::sqrt(kernels::dot(v.data(), v.data(), n));
        if (norm <= kRankTol)
            continue; // numerically dependent column
        kernels::scale(v.data(), 1.0 / norm, n);
        std::copy(v.begin(), v.end(), q.col(kept));
        ++kept;
    }
    if (kept == 0)
        throw DataError("orthonormalize: input has no numerically nonzero column");
    q.cols = kept;
    q.data.resize(n * kept);
    return q;
}

LocalSubspace build_subspace(const Graph& g, const SeedSet& seeds, int d, int k,
                             WalkVariant variant) {
    if (d < 1 || k < 0)
        throw DataError("build_subspace: need d >= 1 and k >= 0");
    const std::size_t n = g.vertex_count();
    const std::size_t d_eff = std::min<std::size_t>(static_cast<std::size_t>(d), n);

    Matrix walks(n, d_eff);
    std::vector<double> p = initial_probability(seeds, n);
    std::copy(p.begin(), p.end(), walks.col(0));
    for (std::size_t j = 1; j < d_eff; ++j) {
        p = walk_step(g, variant, p);
        std::copy(p.begin(), p.end(), walks.col(j));
    }

    Matrix basis = orthonormalize(walks);
    for (int it = 0; it < k; ++it) {
        Matrix next(n, basis.cols);
        for (std::size_t j = 0; j < basis.cols; ++j)
            apply_walk_operator(g, variant, {basis.col(j), n}, {next.col(j), n});
        basis = orthonormalize(next);
    }

    LocalSubspace sub;
    sub.requested_dim = d;
    sub.iterations = k;
    sub.variant = variant;
    sub.rank_reduced = basis.cols < static_cast<std::size_t>(d);
    if (sub.rank_reduced)
        sub.warning = "subspace rank reduced to " + std::to_string(basis.cols) +
                      " (requested " + std::to_string(d) + ")";
    sub.basis = std::move(basis);
    return sub;
}

} // namespace lscd
