#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "specgraph/graph.hpp"

namespace specgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix over arbitrary-precision integers. Row-major storage.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }

    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("matrix product dimension mismatch");
        IntegerMatrix p(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const BigInt& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j) p.at(i, j) += v * o.at(k, j);
            }
        return p;
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline IntegerMatrix adjacency_matrix(const Graph& g) {
    IntegerMatrix m(g.n(), g.n());
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

/// Seidel matrix J - I - 2A: 0 on the diagonal, -1 on edges, +1 on non-edges.
inline IntegerMatrix seidel_matrix(const Graph& g) {
    int n = g.n();
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.at(i, j) = g.adjacent(i, j) ? -1 : 1;
    return m;
}

/// Exact rank over the integers, by fraction-free (Bareiss) elimination.
/// Every division is checked to be exact; a nonzero remainder would mean the
/// elimination invariant was broken and is reported loudly.
inline int integer_rank(IntegerMatrix m) {
    int rank = 0;
    int row = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        for (int i = row + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j) {
                BigInt t = m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j);
                BigInt q, r;
                boost::multiprecision::divide_qr(t, prev, q, r);
                if (r != 0) throw std::logic_error("fraction-free elimination lost exactness");
                m.at(i, j) = std::move(q);
            }
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

/// Walk matrix [ j, Aj, A^2 j, ..., A^{n-1} j ] with exact integer entries.
inline IntegerMatrix walk_matrix(const Graph& g) {
    int n = g.n();
    IntegerMatrix w(n, n);
    std::vector<BigInt> col(n, 1), next(n);
    for (int k = 0; k < n; ++k) {
        for (int v = 0; v < n; ++v) w.at(v, k) = col[v];
        if (k + 1 == n) break;
        for (int v = 0; v < n; ++v) {
            next[v] = 0;
            for (int u = 0; u < n; ++u)
                if (g.adjacent(v, u)) next[v] += col[u];
        }
        col.swap(next);
    }
    return w;
}

/// Number of main eigenvalues, computed exactly as the rank of the walk matrix.
inline int main_count_exact(const Graph& g) {
    if (g.n() == 0) return 0;
    return integer_rank(walk_matrix(g));
}

/// Degree of the minimal polynomial: the least d with M^d dependent on lower
/// powers. Equals the number of distinct eigenvalues for symmetric M.
inline int minimal_polynomial_degree(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("minimal polynomial needs a square matrix");
    int n = m.rows;
    if (n == 0) return 0;
    size_t len = static_cast<size_t>(n) * n;
    IntegerMatrix stacked(1, static_cast<int>(len));
    IntegerMatrix power = IntegerMatrix::identity(n);
    for (size_t e = 0; e < len; ++e) stacked.a[e] = power.a[e];
    for (int d = 1; d <= n; ++d) {
        power = power * m;
        IntegerMatrix next(d + 1, static_cast<int>(len));
        next.a.assign(stacked.a.begin(), stacked.a.end());
        next.a.resize(static_cast<size_t>(d + 1) * len);
        for (size_t e = 0; e < len; ++e) next.a[static_cast<size_t>(d) * len + e] = power.a[e];
        if (integer_rank(next) <= d) return d;
        stacked = std::move(next);
    }
    throw std::logic_error("minimal polynomial degree exceeded matrix order");
}

inline int minimal_polynomial_degree(const Graph& g) {
    return minimal_polynomial_degree(adjacency_matrix(g));
}

/// Exact rational coefficients c with target = sum c_i * basis_i, or nullopt.
/// Solved by elimination over all entry equations, then re-verified entrywise.
inline std::optional<std::vector<Rational>> span_membership(const IntegerMatrix& target,
                                                            const std::vector<IntegerMatrix>& basis) {
    size_t k = basis.size();
    for (const auto& b : basis)
        if (b.rows != target.rows || b.cols != target.cols)
            throw std::invalid_argument("span basis dimension mismatch");

    // Reduced rows of the augmented system, one per pivot unknown.
    std::vector<std::vector<Rational>> pivots;
    std::vector<size_t> pivot_col;
    size_t len = target.a.size();
    for (size_t e = 0; e < len; ++e) {
        std::vector<Rational> eq(k + 1);
        bool any = false;
        for (size_t i = 0; i < k; ++i) {
            eq[i] = Rational(basis[i].a[e]);
            if (eq[i] != 0) any = true;
        }
        eq[k] = Rational(target.a[e]);
        if (!any && eq[k] == 0) continue;
        for (size_t p = 0; p < pivots.size(); ++p) {
            Rational f = eq[pivot_col[p]];
            if (f == 0) continue;
            for (size_t j = 0; j <= k; ++j) eq[j] -= f * pivots[p][j];
        }
        size_t lead = k;
        for (size_t j = 0; j < k; ++j)
            if (eq[j] != 0) {
                lead = j;
                break;
            }
        if (lead == k) {
            if (eq[k] != 0) return std::nullopt;
            continue;
        }
        Rational inv = eq[lead];
        for (size_t j = 0; j <= k; ++j) eq[j] /= inv;
        pivots.push_back(std::move(eq));
        pivot_col.push_back(lead);
        if (pivots.size() == k) break;
    }

    std::vector<Rational> sol(k, Rational(0));
    // Back-substitute in decreasing pivot-column order; free unknowns stay 0.
    std::vector<size_t> order(pivots.size());
    for (size_t p = 0; p < order.size(); ++p) order[p] = p;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return pivot_col[x] > pivot_col[y]; });
    for (size_t p : order) {
        Rational v = pivots[p][k];
        for (size_t j = pivot_col[p] + 1; j < k; ++j) v -= pivots[p][j] * sol[j];
        sol[pivot_col[p]] = v;
    }

    for (size_t e = 0; e < len; ++e) {
        Rational acc(0);
        for (size_t i = 0; i < k; ++i)
            if (sol[i] != 0) acc += sol[i] * Rational(basis[i].a[e]);
        if (acc != Rational(target.a[e])) return std::nullopt;
    }
    return sol;
}

} // namespace specgraph
