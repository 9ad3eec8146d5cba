#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

/// Numerical tolerances. Eigenvalue grouping uses gap <= group_scale * max(1, rho)
/// where rho estimates the spectral radius; an eigenvalue group counts as main
/// when the norm of the all-ones vector projected onto its eigenspace exceeds
/// main_abs.
struct Tolerances {
    double group_scale = 1e-9;
    double main_abs = 1e-7;
};

struct EigenGroup {
    double value = 0.0;
    int mult = 0;
    double jproj = 0.0;
};

/// Grouped spectrum, values descending. The jproj values satisfy
/// sum of squares == n up to roundoff.
struct EigenReport {
    int n = 0;
    double spectral_radius = 0.0;
    double tol_used = 0.0; // absolute grouping gap actually applied
    std::vector<EigenGroup> groups;
};

struct PlainEntry {
    double value = 0.0;
    int pmult = 0;
};

/// Main eigenvalues (descending) and plain eigenvalues with plain
/// multiplicities (descending). The main-plain index is the pair (r, s).
struct RefinedSpectrum {
    int r = 0;
    int s = 0;
    std::vector<double> mains;
    std::vector<PlainEntry> plains;
};

/// The numerical and exact routes disagreed; carries both counts.
class CrossCheckError : public std::runtime_error {
public:
    CrossCheckError(const std::string& what, int exact_value, int numeric_value)
        : std::runtime_error(what + ": exact " + std::to_string(exact_value) + ", numeric " +
                             std::to_string(numeric_value)),
          exact_value_(exact_value),
          numeric_value_(numeric_value) {}

    int exact_value() const { return exact_value_; }
    int numeric_value() const { return numeric_value_; }

private:
    int exact_value_;
    int numeric_value_;
};

namespace detail {

inline EigenReport grouped_spectrum(const Eigen::MatrixXd& m, const Tolerances& tol) {
    int n = static_cast<int>(m.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const auto& vals = solver.eigenvalues();   // ascending
    const auto& vecs = solver.eigenvectors();  // orthonormal columns

    double rho = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
    double gap = tol.group_scale * std::max(1.0, rho);

    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd dots = vecs.transpose() * ones;

    EigenReport rep;
    rep.n = n;
    rep.spectral_radius = rho;
    rep.tol_used = gap;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || vals(i) - vals(i - 1) > gap) {
            EigenGroup g;
            g.mult = i - start;
            double sum = 0.0, proj2 = 0.0;
            for (int k = start; k < i; ++k) {
                sum += vals(k);
                proj2 += dots(k) * dots(k);
            }
            g.value = sum / g.mult;
            g.jproj = std::sqrt(proj2);
            rep.groups.push_back(g);
            start = i;
        }
    }
    std::reverse(rep.groups.begin(), rep.groups.end());
    return rep;
}

} // namespace detail

inline Eigen::MatrixXd adjacency_matrix_d(const Graph& g) {
    int n = g.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1.0;
        m(v, u) = 1.0;
    }
    return m;
}

inline Eigen::MatrixXd seidel_matrix_d(const Graph& g) {
    int n = g.n();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = i == j ? 0.0 : (g.adjacent(i, j) ? -1.0 : 1.0);
    return m;
}

/// Grouped adjacency spectrum with the all-ones projection per eigenspace.
inline EigenReport eigendecompose(const Graph& g, const Tolerances& tol = {}) {
    if (g.n() < 1) throw std::invalid_argument("spectral analysis needs n >= 1");
    return detail::grouped_spectrum(adjacency_matrix_d(g), tol);
}

/// Grouped spectrum of the Seidel matrix J - I - 2A.
inline EigenReport seidel_spectrum(const Graph& g, const Tolerances& tol = {}) {
    if (g.n() < 1) throw std::invalid_argument("spectral analysis needs n >= 1");
    return detail::grouped_spectrum(seidel_matrix_d(g), tol);
}

inline int main_count_projection(const EigenReport& rep, const Tolerances& tol = {}) {
    int r = 0;
    for (const auto& g : rep.groups)
        if (g.jproj > tol.main_abs) ++r;
    return r;
}

/// Refined spectrum from an already-computed report. The projection-based main
/// count is always cross-checked against the exact walk-matrix rank; any
/// disagreement raises CrossCheckError rather than returning a guess.
inline RefinedSpectrum refined_spectrum(const Graph& g, const EigenReport& rep,
                                        const Tolerances& tol = {}) {
    RefinedSpectrum rs;
    for (const auto& grp : rep.groups) {
        bool main = grp.jproj > tol.main_abs;
        if (main) rs.mains.push_back(grp.value);
        int pmult = main ? grp.mult - 1 : grp.mult;
        if (pmult > 0) rs.plains.push_back({grp.value, pmult});
    }
    rs.r = static_cast<int>(rs.mains.size());
    rs.s = static_cast<int>(rs.plains.size());
    int exact = main_count_exact(g);
    if (exact != rs.r)
        throw CrossCheckError("main eigenvalue count cross-check failed", exact, rs.r);
    return rs;
}

inline RefinedSpectrum refined_spectrum(const Graph& g, const Tolerances& tol = {}) {
    return refined_spectrum(g, eigendecompose(g, tol), tol);
}

/// Plain eigenvalues of the complement, predicted by pi -> -pi - 1 with the
/// plain multiplicities carried over; re-sorted descending.
inline std::vector<PlainEntry> predicted_complement_plains(const RefinedSpectrum& rs) {
    std::vector<PlainEntry> out;
    out.reserve(rs.plains.size());
    for (const auto& p : rs.plains) out.push_back({-p.value - 1.0, p.pmult});
    std::sort(out.begin(), out.end(), [](const PlainEntry& a, const PlainEntry& b) {
        return a.value > b.value;
    });
    return out;
}

} // namespace specgraph
