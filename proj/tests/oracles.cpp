#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace lscd::testing {

namespace {

constexpr double kEnterTol = 1e-9;
constexpr double kPivotTol = 1e-11;

// Textbook tableau simplex with Bland's rule. Columns: u (d), v (d),
// slack (m), artificial (m), rhs. x = u - v.
class Tableau {
public:
    Tableau(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
            const std::vector<double>& c)
        : m_(a.size()), d_(c.size()), cols_(2 * d_ + 2 * m_), t_(m_, std::vector<double>(cols_ + 1, 0.0)),
          basis_(m_), active_(m_, true), cost_(c) {
        for (std::size_t i = 0; i < m_; ++i) {
            const double sign = b[i] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < d_; ++j) {
                t_[i][j] = sign * a[i][j];
                t_[i][d_ + j] = -sign * a[i][j];
            }
            t_[i][2 * d_ + i] = sign;          // slack
            t_[i][2 * d_ + m_ + i] = 1.0;      // artificial
            t_[i][cols_] = sign * b[i];
            basis_[i] = 2 * d_ + m_ + i;
        }
    }

    OracleLpResult solve() {
        OracleLpResult res;
        run_phase(/*phase1=*/true);
        double infeas = 0.0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 2 * d_ + m_)
                infeas += t_[i][cols_];
        if (infeas > 1e-7) {
            res.status = OracleLpStatus::infeasible;
            return res;
        }
        purge_artificials();
        if (!run_phase(/*phase1=*/false)) {
            res.status = OracleLpStatus::unbounded;
            return res;
        }
        res.status = OracleLpStatus::optimal;
        res.x.assign(d_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (!active_[i])
                continue;
            if (basis_[i] < d_)
                res.x[basis_[i]] += t_[i][cols_];
            else if (basis_[i] < 2 * d_)
                res.x[basis_[i] - d_] -= t_[i][cols_];
        }
        res.objective = 0.0;
        for (std::size_t j = 0; j < d_; ++j)
            res.objective += cost_[j] * res.x[j];
        return res;
    }

private:
    double reduced_cost(std::size_t j, bool phase1) const {
        double r = column_cost(j, phase1);
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i])
                r -= column_cost(basis_[i], phase1) * t_[i][j];
        return r;
    }

    double column_cost(std::size_t j, bool phase1) const {
        if (phase1)
            return j >= 2 * d_ + m_ ? 1.0 : 0.0;
        if (j < d_)
            return cost_[j];
        if (j < 2 * d_)
            return -cost_[j - d_];
        return 0.0;
    }

    bool column_allowed(std::size_t j) const {
        return j < 2 * d_ + m_; // artificials never enter
    }

    void pivot(std::size_t row, std::size_t col) {
        const double p = t_[row][col];
        for (double& v : t_[row])
            v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || !active_[i])
                continue;
            const double f = t_[i][col];
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland's rule throughout: smallest eligible entering column, leaving
    // row breaks ratio ties by smallest basic variable index.
    bool run_phase(bool phase1) {
        for (std::size_t iter = 0; iter < 50000; ++iter) {
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!column_allowed(j))
                    continue;
                if (reduced_cost(j, phase1) < -kEnterTol) {
                    entering = j;
                    break;
                }
            }
            if (entering == cols_)
                return true;

            std::size_t leaving = m_;
            double best = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (!active_[i] || t_[i][entering] <= kPivotTol)
                    continue;
                const double ratio = t_[i][cols_] / t_[i][entering];
                if (leaving == m_ || ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && basis_[i] < basis_[leaving])) {
                    best = ratio;
                    leaving = i;
                }
            }
            if (leaving == m_)
                return false; // unbounded
            pivot(leaving, entering);
        }
        throw std::runtime_error("oracle_lp: iteration limit");
    }

    void purge_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < 2 * d_ + m_)
                continue;
            bool pivoted = false;
            for (std::size_t j = 0; j < 2 * d_ + m_ && !pivoted; ++j) {
                if (std::fabs(t_[i][j]) > 1e-9) {
                    pivot(i, j);
                    pivoted = true;
                }
            }
            if (!pivoted)
                active_[i] = false; // redundant constraint row
        }
    }

    std::size_t m_, d_, cols_;
    std::vector<std::vector<double>> t_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
    std::vector<double> cost_;
};

} // namespace

OracleLpResult oracle_lp(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                         const std::vector<double>& c) {
    return Tableau(a, b, c).solve();
}

OracleLpResult oracle_indicator_lp(const Matrix& v,
                                   const std::vector<std::vector<double>>& mass_rows,
                                   const std::vector<double>& mass_rhs) {
    const std::size_t n = v.rows, d = v.cols;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row(d);
        for (std::size_t j = 0; j < d; ++j)
            row[j] = -v.at(i, j);
        a.push_back(std::move(row));
        b.push_back(0.0);
    }
    for (std::size_t r = 0; r < mass_rows.size(); ++r) {
        std::vector<double> row(d, 0.0);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < n; ++i)
                row[j] -= mass_rows[r][i] * v.at(i, j);
        a.push_back(std::move(row));
        b.push_back(-mass_rhs[r]);
    }
    std::vector<double> c(d, 0.0);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i)
            c[j] += v.at(i, j);
    return oracle_lp(a, b, c);
}

Matrix dense_walk_matrix(const Graph& g, WalkVariant variant) {
    const std::size_t n = g.vertex_count();
    Matrix m(n, n);
    // column u holds the image of e_u under N^T
    for (Vertex u = 0; u < n; ++u) {
        const double du = g.degree(u) + 1.0;
        if (variant == WalkVariant::rw) {
            m.at(u, u) = 1.0 / du;
            for (Vertex w : g.neighbors(u))
                m.at(w, u) = 1.0 / du;
        } else {
            m.at(u, u) = 1.0 / du;
            for (Vertex w : g.neighbors(u))
                m.at(w, u) = 1.0 / (std::sqrt(du) * std::sqrt(g.degree(w) + 1.0));
        }
    }
    return m;
}

std::vector<double> dense_apply(const Matrix& m, std::span<const double> x) {
    std::vector<double> out(m.rows, 0.0);
    for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i)
            out[i] += m.at(i, j) * x[j];
    return out;
}

Matrix dense_apply(const Matrix& m, const Matrix& x) {
    Matrix out(m.rows, x.cols);
    for (std::size_t c = 0; c < x.cols; ++c) {
        auto col = dense_apply(m, std::span<const double>(x.col(c), x.rows));
        std::copy(col.begin(), col.end(), out.col(c));
    }
    return out;
}

Matrix householder_q(const Matrix& m) {
    const std::size_t n = m.rows, d = m.cols;
    Matrix r = m;
    std::vector<std::vector<double>> vs;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<double> v(n, 0.0);
        double norm = 0.0;
        for (std::size_t i = j; i < n; ++i)
            norm += r.at(i, j) * r.at(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-14)
            throw std::runtime_error("householder_q: rank deficient input");
        const double alpha = r.at(j, j) >= 0 ? -norm : norm;
        for (std::size_t i = j; i < n; ++i)
            v[i] = r.at(i, j);
        v[j] -= alpha;
        double vnorm = 0.0;
        for (double e : v)
            vnorm += e * e;
        vnorm = std::sqrt(vnorm);
        if (vnorm < 1e-14)
            throw std::runtime_error("householder_q: degenerate reflector");
        for (double& e : v)
            e /= vnorm;
        for (std::size_t c = j; c < d; ++c) {
            double proj = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                proj += v[i] * r.at(i, c);
            for (std::size_t i = 0; i < n; ++i)
                r.at(i, c) -= 2.0 * proj * v[i];
        }
        vs.push_back(std::move(v));
    }
    // apply reflectors to the thin identity to extract Q
    Matrix q(n, d);
    for (std::size_t j = 0; j < d; ++j)
        q.at(j, j) = 1.0;
    for (std::size_t k = vs.size(); k-- > 0;) {
        const auto& v = vs[k];
        for (std::size_t c = 0; c < d; ++c) {
            double proj = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                proj += v[i] * q.at(i, c);
            for (std::size_t i = 0; i < n; ++i)
                q.at(i, c) -= 2.0 * proj * v[i];
        }
    }
    return q;
}

Matrix projector(const Matrix& v) {
    Matrix p(v.rows, v.rows);
    for (std::size_t i = 0; i < v.rows; ++i)
        for (std::size_t j = 0; j < v.rows; ++j) {
            double acc = 0.0;
            for (std::size_t c = 0; c < v.cols; ++c)
                acc += v.at(i, c) * v.at(j, c);
            p.at(i, j) = acc;
        }
    return p;
}

Matrix oracle_subspace_projector(const Graph& g, const std::vector<Vertex>& seeds, int d, int k,
                                 WalkVariant variant) {
    const std::size_t n = g.vertex_count();
    Matrix op = dense_walk_matrix(g, variant);

    std::vector<double> p(n, 0.0);
    for (Vertex s : seeds)
        p[s] += 1.0 / static_cast<double>(seeds.size());

    Matrix walks(n, static_cast<std::size_t>(d));
    std::copy(p.begin(), p.end(), walks.col(0));
    for (int j = 1; j < d; ++j) {
        p = dense_apply(op, p);
        if (variant == WalkVariant::sym) {
            double s = 0.0;
            for (double e : p)
                s += e;
            for (double& e : p)
                e /= s;
        }
        std::copy(p.begin(), p.end(), walks.col(static_cast<std::size_t>(j)));
    }

    Matrix q = householder_q(walks);
    for (int it = 0; it < k; ++it)
        q = householder_q(dense_apply(op, q));
    return projector(q);
}

std::size_t oracle_triangle_count(const Graph& g, std::span<const Vertex> community) {
    std::vector<Vertex> c(community.begin(), community.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::size_t count = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            for (std::size_t l = j + 1; l < c.size(); ++l)
                if (g.has_edge(c[i], c[j]) && g.has_edge(c[j], c[l]) && g.has_edge(c[i], c[l]))
                    ++count;
    return count;
}

OracleCounts oracle_counts(const Graph& g, std::span<const Vertex> community) {
    std::unordered_set<Vertex> in(community.begin(), community.end());
    OracleCounts c;
    c.n_k = in.size();
    for (Vertex v : in)
        c.d_k += g.degree(v);
    // internal edges counted over the global edge list
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex w : g.neighbors(u))
            if (u < w && in.count(u) && in.count(w))
                ++c.e_kk;
    std::vector<Vertex> members(in.begin(), in.end());
    c.triangles = oracle_triangle_count(g, members);
    return c;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edges(n, edges);
}

Graph two_cliques(std::size_t k) {
    const std::size_t n = 2 * k - 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    for (std::size_t i = k - 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edges(n, edges);
}

} // namespace lscd::testing
