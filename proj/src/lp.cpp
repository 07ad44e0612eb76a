#include "lscd/lp.hpp"

#include "lscd/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

// The primal problem has only d = dim(V) variables but n+1 or n+2
// inequality rows, so we run a revised simplex on its dual, whose basis is
// d x d:
//
//   primal: min f.x  s.t.  A x <= b           (A is m x d, x free)
//   dual:   min b.l  s.t.  A^T l = -f, l >= 0
//
// The dual is always feasible (l = 1 on the -V rows reproduces -f exactly),
// so primal infeasibility surfaces as dual unboundedness. At a dual optimum
// the simplex multipliers z of the basis solve B^T z = b_B and are exactly
// the primal solution x. Every solution is certified by substitution before
// it is returned.

namespace lscd {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr double kFeasibilityTol = 1e-8;

// Dense LU with partial pivoting for the d x d basis systems.
class SmallLu {
public:
    bool factor(std::vector<double> a, std::size_t n) {
        n_ = n;
        lu_ = std::move(a);
        piv_.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            double best = std::fabs(lu_[k + k * n]);
            for (std::size_t i = k + 1; i < n; ++i) {
                double v = std::fabs(lu_[i + k * n]);
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (best < 1e-13)
                return false;
            piv_[k] = p;
            if (p != k)
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(lu_[k + j * n], lu_[p + j * n]);
            const double diag = lu_[k + k * n];
            for (std::size_t i = k + 1; i < n; ++i) {
                lu_[i + k * n] /= diag;
                const double lik = lu_[i + k * n];
                for (std::size_t j = k + 1; j < n; ++j)
                    lu_[i + j * n] -= lik * lu_[k + j * n];
            }
        }
        return true;
    }

    // B x = rhs
    void solve(std::vector<double>& x) const {
        for (std::size_t k = 0; k < n_; ++k)
            if (piv_[k] != k)
                std::swap(x[k], x[piv_[k]]);
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                x[i] -= lu_[i + j * n_] * x[j];
        for (std::size_t i = n_; i-- > 0;) {
            for (std::size_t j = i + 1; j < n_; ++j)
                x[i] -= lu_[i + j * n_] * x[j];
            x[i] /= lu_[i + i * n_];
        }
    }

    // B^T x = rhs
    void solve_transposed(std::vector<double>& x) const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < i; ++j)
                x[i] -= lu_[j + i * n_] * x[j];
            x[i] /= lu_[i + i * n_];
        }
        for (std::size_t i = n_; i-- > 0;)
            for (std::size_t j = i + 1; j < n_; ++j)
                x[i] -= lu_[j + i * n_] * x[j];
        for (std::size_t k = n_; k-- > 0;)
            if (piv_[k] != k)
                std::swap(x[k], x[piv_[k]]);
    }

private:
    std::size_t n_ = 0;
    std::vector<double> lu_; // column-major
    std::vector<std::size_t> piv_;
};

enum class DualOutcome { optimal, unbounded };

class DualSimplex {
public:
    // a: column-major m x d; b: primal rhs (m); f: primal objective (d)
    DualSimplex(const std::vector<double>& a, std::size_t m, std::size_t d,
                const std::vector<double>& b)
        : a_(a), b_(b), m_(m), d_(d) {}

    // Returns optimal (with x filled) or unbounded (primal infeasible).
    DualOutcome run(const std::vector<double>& f, std::vector<double>& x_out) {
        // dual rhs q = -f, flipped nonnegative row by row
        row_sign_.assign(d_, 1.0);
        q_.resize(d_);
        for (std::size_t i = 0; i < d_; ++i) {
            q_[i] = -f[i];
            if (q_[i] < 0.0) {
                q_[i] = -q_[i];
                row_sign_[i] = -1.0;
            }
        }
        in_basis_.assign(m_, false);
        basis_.resize(d_);
        for (std::size_t i = 0; i < d_; ++i)
            basis_[i] = static_cast<long>(m_ + i); // artificials

        if (!iterate(/*phase1=*/true))
            throw std::runtime_error("lp: phase-1 cannot be unbounded");
        double infeas = 0.0;
        for (std::size_t t = 0; t < d_; ++t)
            if (basis_[t] >= static_cast<long>(m_))
                infeas += lambda_[t];
        if (infeas > kFeasibilityTol * (1.0 + max_abs(q_)))
            // dual infeasible; with this dual that is numerical noise, but
            // either way the primal has no certified solution
            return DualOutcome::unbounded;
        purge_artificials();

        if (!iterate(/*phase1=*/false))
            return DualOutcome::unbounded;

        // multipliers of the final basis are the primal solution
        std::vector<double> z(d_);
        for (std::size_t t = 0; t < d_; ++t)
            z[t] = cost(basis_[t], false);
        lu_.solve_transposed(z);
        x_out.resize(d_);
        for (std::size_t i = 0; i < d_; ++i)
            x_out[i] = row_sign_[i] * z[i];
        return DualOutcome::optimal;
    }

private:
    static double max_abs(const std::vector<double>& v) {
        double m = 0.0;
        for (double e : v)
            m = std::max(m, std::fabs(e));
        return m;
    }

    double cost(long col, bool phase1) const {
        if (phase1)
            return col >= static_cast<long>(m_) ? 1.0 : 0.0;
        assert(col < static_cast<long>(m_));
        return b_[static_cast<std::size_t>(col)];
    }

    // column `col` of the (sign-flipped) dual constraint matrix
    void fetch_column(long col, std::vector<double>& out) const {
        out.assign(d_, 0.0);
        if (col >= static_cast<long>(m_)) {
            out[static_cast<std::size_t>(col) - m_] = 1.0;
            return;
        }
        for (std::size_t i = 0; i < d_; ++i)
            out[i] = row_sign_[i] * a_[static_cast<std::size_t>(col) + i * m_];
    }

    void refactor() {
        std::vector<double> bmat(d_ * d_);
        std::vector<double> col;
        for (std::size_t t = 0; t < d_; ++t) {
            fetch_column(basis_[t], col);
            std::copy(col.begin(), col.end(), bmat.begin() + t * d_);
        }
        if (!lu_.factor(std::move(bmat), d_))
            throw std::runtime_error("lp: singular simplex basis");
        lambda_ = q_;
        lu_.solve(lambda_);
        for (double& v : lambda_) {
            if (v < 0.0) {
                if (v < -1e-7)
                    throw std::runtime_error("lp: simplex lost feasibility");
                v = 0.0;
            }
        }
    }

    // One simplex phase. Returns false when the phase detects an unbounded
    // ray (possible in phase 2 only).
    bool iterate(bool phase1) {
        refactor();
        const std::size_t iter_limit = 200 + 40 * (m_ + d_);
        int stalled = 0;
        std::vector<double> z(d_), zs(d_), t(m_), w;
        for (std::size_t iter = 0; iter < iter_limit; ++iter) {
            for (std::size_t i = 0; i < d_; ++i)
                z[i] = cost(basis_[i], phase1);
            lu_.solve_transposed(z);
            for (std::size_t i = 0; i < d_; ++i)
                zs[i] = row_sign_[i] * z[i];
            // reduced costs of all real columns at once: t = A * zs
            std::fill(t.begin(), t.end(), 0.0);
            for (std::size_t i = 0; i < d_; ++i)
                kernels::axpy(t.data(), zs[i], a_.data() + i * m_, m_);

            const bool bland = stalled > 50;
            long entering = -1;
            double best = -kReducedCostTol;
            for (std::size_t j = 0; j < m_; ++j) {
                if (in_basis_[j])
                    continue;
                const double rj = (phase1 ? 0.0 : b_[j]) - t[j];
                if (rj < best) {
                    entering = static_cast<long>(j);
                    if (bland)
                        break; // smallest eligible index
                    best = rj;
                }
            }
            if (entering < 0)
                return true; // optimal for this phase

            fetch_column(entering, w);
            lu_.solve(w);
            long leaving = -1;
            double theta = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < d_; ++i) {
                if (w[i] <= kPivotTol)
                    continue;
                const double ratio = lambda_[i] / w[i];
                if (ratio < theta - 1e-12 ||
                    (ratio < theta + 1e-12 && (leaving < 0 || basis_[i] < basis_[leaving]))) {
                    theta = ratio;
                    leaving = static_cast<long>(i);
                }
            }
            if (leaving < 0) {
                if (phase1)
                    return true; // bounded by construction; treat as converged
                return false;    // unbounded ray -> primal infeasible
            }
            stalled = (theta <= 1e-13) ? stalled + 1 : 0;

            if (basis_[leaving] < static_cast<long>(m_))
                in_basis_[static_cast<std::size_t>(basis_[leaving])] = false;
            basis_[leaving] = entering;
            in_basis_[static_cast<std::size_t>(entering)] = true;
            refactor();
        }
        throw std::runtime_error("lp: simplex iteration limit exceeded");
    }

    // Swap any zero-level artificial still in the basis for a real column.
    // Rows of an orthonormal V span R^d, so a pivot always exists.
    void purge_artificials() {
        std::vector<double> w;
        for (std::size_t t = 0; t < d_; ++t) {
            if (basis_[t] < static_cast<long>(m_))
                continue;
            bool swapped = false;
            for (std::size_t j = 0; j < m_ && !swapped; ++j) {
                if (in_basis_[j])
                    continue;
                fetch_column(static_cast<long>(j), w);
                lu_.solve(w);
                if (std::fabs(w[t]) > 1e-9) {
                    basis_[t] = static_cast<long>(j);
                    in_basis_[j] = true;
                    refactor();
                    swapped = true;
                }
            }
            if (!swapped)
                throw std::runtime_error("lp: cannot remove artificial from basis");
        }
    }

    const std::vector<double>& a_;
    const std::vector<double>& b_;
    std::size_t m_, d_;
    std::vector<double> row_sign_;
    std::vector<double> q_;
    std::vector<long> basis_;
    std::vector<bool> in_basis_;
    std::vector<double> lambda_;
    SmallLu lu_;
};

IndicatorSolution solve_over_subspace(const LocalSubspace& subspace,
                                      const std::vector<std::span<const double>>& mass_rows,
                                      const std::vector<double>& mass_rhs) {
    const Matrix& v = subspace.basis;
    const std::size_t n = v.rows;
    const std::size_t d = v.cols;
    const std::size_t m = n + mass_rows.size();

    // A (column-major): -V stacked over -(V^T w)^T rows for each mass
    // constraint w.y >= rhs
    std::vector<double> a(m * d);
    std::vector<double> f(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double* col = v.col(j);
        double* out = a.data() + j * m;
        for (std::size_t i = 0; i < n; ++i)
            out[i] = -col[i];
        for (std::size_t r = 0; r < mass_rows.size(); ++r)
            out[n + r] = -kernels::dot(col, mass_rows[r].data(), n);
        f[j] = kernels::sum(col, n);
    }
    std::vector<double> b(m, 0.0);
    for (std::size_t r = 0; r < mass_rows.size(); ++r)
        b[n + r] = -mass_rhs[r];

    IndicatorSolution sol;
    DualSimplex simplex(a, m, d, b);
    std::vector<double> x;
    if (simplex.run(f, x) != DualOutcome::optimal) {
        sol.status = LpStatus::infeasible;
        return sol;
    }

    // recover y = Vx and certify by substitution
    std::vector<double> y(n, 0.0);
    for (std::size_t j = 0; j < d; ++j)
        kernels::axpy(y.data(), x[j], v.col(j), n);

    double min_y = 0.0, max_y = 0.0;
    for (double e : y) {
        min_y = std::min(min_y, e);
        max_y = std::max(max_y, e);
    }
    if (min_y < -kFeasibilityTol)
        throw std::runtime_error("lp: solution certification failed (y has entries < -1e-8)");
    for (std::size_t r = 0; r < mass_rows.size(); ++r) {
        double got = kernels::dot(mass_rows[r].data(), y.data(), n);
        if (got < mass_rhs[r] - kFeasibilityTol * (1.0 + std::fabs(mass_rhs[r])))
            throw std::runtime_error("lp: solution certification failed (mass constraint violated)");
    }
    // entries at active constraints are exact zeros of the vertex solution;
    // rebuild them as such so rankings do not depend on dot-product dust
    const double dust = 1e-12 * std::max(1.0, max_y);
    for (double& e : y)
        if (e < dust)
            e = 0.0;

    sol.status = LpStatus::optimal;
    sol.objective = kernels::sum(y.data(), n);
    sol.y = std::move(y);
    sol.x = std::move(x);
    return sol;
}

void check_indicator(std::span<const double> s, std::size_t n, const char* what) {
    if (s.size() != n)
        throw DataError(std::string(what) + ": indicator size mismatch");
    bool any = false;
    for (double e : s)
        if (e != 0.0)
            any = true;
    if (!any)
        throw DataError(std::string(what) + ": indicator is identically zero");
}

} // namespace

IndicatorSolution solve_indicator_lp(const LocalSubspace& subspace,
                                     std::span<const double> seed_indicator) {
    check_indicator(seed_indicator, subspace.size(), "solve_indicator_lp");
    return solve_over_subspace(subspace, {seed_indicator}, {1.0});
}

IndicatorSolution solve_reseeded_lp(const LocalSubspace& subspace,
                                    std::span<const double> seed_indicator,
                                    std::span<const double> expanded_indicator,
                                    std::size_t seed_count, std::size_t expanded_count) {
    check_indicator(seed_indicator, subspace.size(), "solve_reseeded_lp");
    check_indicator(expanded_indicator, subspace.size(), "solve_reseeded_lp");
    if (expanded_count < seed_count || seed_count == 0)
        throw DataError("solve_reseeded_lp: need |S_t| >= |S| >= 1");
    const double w1 = 1.0 / static_cast<double>(seed_count);
    const double w2 = 0.5 * w1;
    const double rhs = 1.0 + w2 * static_cast<double>(expanded_count - seed_count);
    return solve_over_subspace(subspace, {seed_indicator, expanded_indicator}, {1.0, rhs});
}

std::vector<Vertex> rank_vertices(std::span<const double> y) {
    std::vector<Vertex> order(y.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (y[a] != y[b])
            return y[a] > y[b];
        return a < b;
    });
    return order;
}

} // namespace lscd
