#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

/// Partition of the vertices with the average-degree matrix toward each class.
/// When equitable, b[i][j] is the exact common count of class-j neighbors seen
/// from any vertex of class i; otherwise b holds the class averages.
struct QuotientMatrix {
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<Rational>> b;
    bool equitable = false;
};

inline QuotientMatrix check_equitable(const Graph& g, const std::vector<std::vector<int>>& classes) {
    std::vector<int> class_of(g.n(), -1);
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty()) throw std::invalid_argument("partition has an empty class");
        for (int v : classes[i]) {
            if (v < 0 || v >= g.n()) throw std::invalid_argument("partition vertex out of range");
            if (class_of[v] >= 0) throw std::invalid_argument("partition classes overlap");
            class_of[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (class_of[v] < 0) throw std::invalid_argument("partition does not cover all vertices");

    size_t k = classes.size();
    QuotientMatrix q;
    q.classes = classes;
    q.b.assign(k, std::vector<Rational>(k, Rational(0)));
    q.equitable = true;
    for (size_t i = 0; i < k; ++i) {
        std::vector<long long> total(k, 0);
        std::vector<std::vector<int>> first_counts;
        for (int v : classes[i]) {
            std::vector<int> cnt(k, 0);
            for (int u : g.neighbors(v)) ++cnt[class_of[u]];
            for (size_t j = 0; j < k; ++j) total[j] += cnt[j];
            if (first_counts.empty())
                first_counts.push_back(cnt);
            else if (cnt != first_counts[0])
                q.equitable = false;
        }
        for (size_t j = 0; j < k; ++j)
            q.b[i][j] = Rational(total[j], static_cast<long long>(classes[i].size()));
    }
    return q;
}

/// Quotient of the valency partition (classes in ascending-degree order).
inline QuotientMatrix valency_quotient(const Graph& g) {
    return check_equitable(g, valency_partition(g).classes);
}

/// For a graph with at most two main eigenvalues and at least two distinct
/// degrees, the exact pair (a, b) with A d = a d + b j where d is the degree
/// vector. Regular graphs and graphs with three or more mains give nullopt.
inline std::optional<std::pair<Rational, Rational>> check_two_main_equation(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("check_two_main_equation needs n >= 1");
    std::vector<int> d = g.degrees();
    std::vector<long long> ad(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) ad[v] += d[u];

    int x = 0, y = -1;
    for (int v = 1; v < g.n(); ++v)
        if (d[v] != d[x]) {
            y = v;
            break;
        }
    if (y < 0) return std::nullopt; // regular: the fit is not the two-main form

    // Solve a*d[x] + b = ad[x], a*d[y] + b = ad[y], then verify every row.
    Rational a = Rational(ad[x] - ad[y]) / Rational(d[x] - d[y]);
    Rational b = Rational(ad[x]) - a * d[x];
    for (int v = 0; v < g.n(); ++v)
        if (a * d[v] + b != Rational(ad[v])) return std::nullopt;
    return std::make_pair(a, b);
}

struct SrgParams {
    int n = 0;
    int k = 0;
    int a = 0;
    int c = 0;

    bool operator==(const SrgParams& o) const {
        return n == o.n && k == o.k && a == o.a && c == o.c;
    }
};

/// Exact strongly-regular test: regular, neither complete nor edgeless, and
/// A^2 = kI + aA + c(J - I - A) entrywise. Complete multipartite graphs pass
/// (the imprimitive case), as do disjoint unions of equal cliques (c = 0).
inline std::optional<SrgParams> check_srg(const Graph& g) {
    int n = g.n();
    if (n < 2) return std::nullopt;
    std::vector<int> deg = g.degrees();
    int k = deg[0];
    for (int v = 1; v < n; ++v)
        if (deg[v] != k) return std::nullopt;
    if (k == 0 || k == n - 1) return std::nullopt;

    int a = -1, c = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) ++common;
            int& slot = g.adjacent(u, v) ? a : c;
            if (slot < 0)
                slot = common;
            else if (slot != common)
                return std::nullopt;
        }
    // k >= 1 and k <= n-2 guarantee both an edge and a non-edge exist.
    if (1LL * k * (k - a - 1) != 1LL * (n - k - 1) * c)
        throw std::logic_error("strongly regular count identity violated");
    return SrgParams{n, k, a, c};
}

/// Strong-graph classification via the Seidel matrix S = J - I - 2A.
/// Strong means S^2 lies in span{S, I, J}; that holds exactly when the graph
/// is strongly regular or S has just two distinct eigenvalues (minimal
/// polynomial degree 2), and the verdict records which of the two hold.
struct StrongClassification {
    enum class Verdict { StronglyRegular, TwoSeidelEigenvalues, Both, NotStrong };

    Verdict verdict = Verdict::NotStrong;
    std::optional<SrgParams> srg;
    /// (alpha, beta, gamma) with S^2 = alpha S + beta I + gamma J, when strong.
    std::optional<std::array<Rational, 3>> span_coeffs;

    bool strong() const { return verdict != Verdict::NotStrong; }
};

inline const char* to_string(StrongClassification::Verdict v) {
    switch (v) {
        case StrongClassification::Verdict::StronglyRegular: return "strongly-regular";
        case StrongClassification::Verdict::TwoSeidelEigenvalues: return "two-seidel-eigenvalues";
        case StrongClassification::Verdict::Both: return "both";
        case StrongClassification::Verdict::NotStrong: return "not-strong";
    }
    return "not-strong";
}

inline StrongClassification check_strong(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("check_strong needs n >= 2");
    IntegerMatrix s = seidel_matrix(g);
    IntegerMatrix j(g.n(), g.n());
    for (auto& e : j.a) e = 1;
    auto span = span_membership(s * s, {s, IntegerMatrix::identity(g.n()), j});

    StrongClassification out;
    out.srg = check_srg(g);
    bool two_seidel = span.has_value() && minimal_polynomial_degree(s) == 2;
    if (span.has_value()) {
        out.span_coeffs = std::array<Rational, 3>{(*span)[0], (*span)[1], (*span)[2]};
        if (!out.srg.has_value() && !two_seidel)
            throw std::logic_error("strong graph is neither strongly regular nor two-Seidel");
    } else if (out.srg.has_value()) {
        throw std::logic_error("strongly regular graph failed the Seidel span test");
    }

    if (out.srg.has_value() && two_seidel)
        out.verdict = StrongClassification::Verdict::Both;
    else if (out.srg.has_value())
        out.verdict = StrongClassification::Verdict::StronglyRegular;
    else if (two_seidel)
        out.verdict = StrongClassification::Verdict::TwoSeidelEigenvalues;
    else
        out.verdict = StrongClassification::Verdict::NotStrong;
    return out;
}

/// Biregular with exactly three distinct eigenvalues (exact minimal-polynomial
/// route). Carries the two valencies (ascending) and the valency quotient,
/// which is equitable for such graphs.
struct StronglyBiregular {
    std::array<int, 2> valencies{};
    QuotientMatrix quotient;
};

inline std::optional<StronglyBiregular> check_strongly_biregular(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("check_strongly_biregular needs a connected graph");
    ValencyPartition vp = valency_partition(g);
    if (vp.s() != 2) return std::nullopt;
    if (minimal_polynomial_degree(g) != 3) return std::nullopt;
    StronglyBiregular out;
    out.valencies = {vp.valencies[0], vp.valencies[1]};
    out.quotient = check_equitable(g, vp.classes);
    return out;
}

/// Main eigenvalues of a nonregular strong graph from its Seidel data: the
/// Seidel spectrum is [-1-2*theta0]^m0, [-1-2*theta1]^m1 and the adjacency
/// spectrum is mu0, mu1, [theta0]^(m0-1), [theta1]^(m1-1), so the trace of A
/// and of A^2 pin down mu0 + mu1 and mu0^2 + mu1^2. Returns mu0 >= mu1.
inline std::pair<double, double> strong_main_eigenvalues(double theta0, double theta1, int m0,
                                                         int m1, int n, int e) {
    if (m0 < 1 || m1 < 1 || m0 + m1 != n) throw std::invalid_argument("bad Seidel multiplicities");
    if (e < 0) throw std::invalid_argument("negative edge count");
    double p = -(m0 - 1) * theta0 - (m1 - 1) * theta1;
    double q = 2.0 * e - (m0 - 1) * theta0 * theta0 - (m1 - 1) * theta1 * theta1;
    double disc = 2.0 * q - p * p;
    if (disc < -1e-9 * std::max(1.0, std::abs(q)))
        throw std::invalid_argument("parameters admit no real main eigenvalues");
    double root = std::sqrt(std::max(disc, 0.0));
    return {(p + root) / 2.0, (p - root) / 2.0};
}

/// Positive eigenvector alpha with (A - theta1 I)(A - theta2 I) = alpha alpha^T
/// for a connected graph with exactly three distinct eigenvalues
/// theta0 > theta1 > theta2; alpha_i = sqrt(d_i + theta1*theta2) and
/// A alpha = theta0 alpha. Both identities are re-verified within 1e-8.
/// Returns nullopt when the eigenvalue count is not three.
inline std::optional<std::vector<double>> alpha_vector(const Graph& g, const Tolerances& tol = {}) {
    if (!is_connected(g)) throw std::invalid_argument("alpha_vector needs a connected graph");
    if (minimal_polynomial_degree(g) != 3) return std::nullopt;
    EigenReport rep = eigendecompose(g, tol);
    if (rep.groups.size() != 3)
        throw CrossCheckError("distinct eigenvalue count cross-check failed", 3,
                              static_cast<int>(rep.groups.size()));
    double theta1 = rep.groups[1].value, theta2 = rep.groups[2].value;
    double prod = theta1 * theta2;

    int n = g.n();
    std::vector<int> deg = g.degrees();
    std::vector<double> alpha(n);
    for (int v = 0; v < n; ++v) {
        double t = deg[v] + prod;
        if (t < -1e-8) throw std::runtime_error("alpha_vector: negative diagonal entry");
        alpha[v] = std::sqrt(std::max(t, 0.0));
    }

    double theta0 = rep.groups[0].value;
    for (int v = 0; v < n; ++v) {
        double av = 0.0;
        for (int u : g.neighbors(v)) av += alpha[u];
        if (std::abs(av - theta0 * alpha[v]) > 1e-8)
            throw std::runtime_error("alpha_vector: eigenvector identity failed");
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            // ((A - theta1)(A - theta2))_{uv} = (A^2)_{uv} - (theta1+theta2) A_{uv} + prod [u==v]
            double a2 = 0.0;
            for (int w : g.neighbors(u))
                if (g.adjacent(w, v)) a2 += 1.0;
            double lhs = a2 - (theta1 + theta2) * (g.adjacent(u, v) ? 1.0 : 0.0) +
                         (u == v ? prod : 0.0);
            if (std::abs(lhs - alpha[u] * alpha[v]) > 1e-8)
                throw std::runtime_error("alpha_vector: rank-one identity failed");
        }
    return alpha;
}

/// For a connected graph with exactly three distinct eigenvalues: having two
/// main eigenvalues is equivalent to being strongly biregular. Reports both
/// sides and whether they agree.
struct RowlinsonReport {
    int main_count = 0;
    bool strongly_biregular = false;
    bool consistent = false;
};

inline RowlinsonReport check_rowlinson(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("check_rowlinson needs a connected graph");
    if (minimal_polynomial_degree(g) != 3)
        throw std::invalid_argument("check_rowlinson needs exactly three distinct eigenvalues");
    RowlinsonReport rep;
    rep.main_count = main_count_exact(g);
    rep.strongly_biregular = check_strongly_biregular(g).has_value();
    rep.consistent = (rep.main_count == 2) == rep.strongly_biregular;
    return rep;
}

/// Taxonomy of disconnected graphs with main-plain index (2,2).
struct DisconnectedClassification {
    enum class Family { CliquesTwoSizes, IsolatedPlusMultipartite, IsolatedPlusSrg, TwoSrgs, None };

    Family family = Family::None;
    /// CliquesTwoSizes: all component orders, descending.
    std::vector<int> clique_sizes;
    /// IsolatedPlusMultipartite: isolated count and the part sizes.
    int isolated_count = 0;
    std::vector<int> part_sizes;
    /// IsolatedPlusSrg: srg_a. TwoSrgs: srg_a, srg_b plus the shared plain pair.
    std::optional<SrgParams> srg_a;
    std::optional<SrgParams> srg_b;
    std::array<double, 2> shared_plains{};
};

inline const char* to_string(DisconnectedClassification::Family f) {
    switch (f) {
        case DisconnectedClassification::Family::CliquesTwoSizes: return "cliques-i";
        case DisconnectedClassification::Family::IsolatedPlusMultipartite: return "isolated+multipartite-ii";
        case DisconnectedClassification::Family::IsolatedPlusSrg: return "isolated+srg-iii";
        case DisconnectedClassification::Family::TwoSrgs: return "two-srg-iv";
        case DisconnectedClassification::Family::None: return "none";
    }
    return "none";
}

namespace detail {

inline bool is_complete_graph(const Graph& g) {
    return g.edge_count() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
}

/// Part sizes when g is complete multipartite (its complement is a disjoint
/// union of cliques), else nullopt.
inline std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
    Graph co = complement(g);
    std::vector<int> parts;
    for (const auto& comp : connected_components(co)) {
        if (!is_complete_graph(induced_subgraph(co, comp))) return std::nullopt;
        parts.push_back(static_cast<int>(comp.size()));
    }
    return parts;
}

} // namespace detail

/// Matches a disconnected graph of index (2,2) against the four structural
/// families, first match wins:
///   (i)  cliques of exactly two distinct orders, one order appearing once;
///   (ii) isolated vertices plus one regular complete multipartite graph;
///   (iii) one isolated vertex plus one strongly regular graph;
///   (iv) two strongly regular graphs of different valency sharing both
///        non-Perron eigenvalues.
inline DisconnectedClassification classify_disconnected(const Graph& g, const RefinedSpectrum& rs) {
    if (is_connected(g)) throw std::invalid_argument("classify_disconnected needs a disconnected graph");
    if (rs.r != 2 || rs.s != 2)
        throw std::invalid_argument("classify_disconnected needs main-plain index (2,2)");

    auto comps = connected_components(g);
    std::vector<Graph> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(induced_subgraph(g, c));

    DisconnectedClassification out;

    // (i) every component a clique, exactly two orders, one of them unique
    bool all_cliques = true;
    for (const auto& p : parts)
        if (!detail::is_complete_graph(p)) {
            all_cliques = false;
            break;
        }
    if (all_cliques) {
        std::map<int, int> by_size;
        for (const auto& p : parts) ++by_size[p.n()];
        if (by_size.size() == 2) {
            int unique_sizes = 0;
            for (auto [size, count] : by_size)
                if (count == 1) ++unique_sizes;
            if (unique_sizes == 1) {
                out.family = DisconnectedClassification::Family::CliquesTwoSizes;
                for (const auto& p : parts) out.clique_sizes.push_back(p.n());
                std::sort(out.clique_sizes.rbegin(), out.clique_sizes.rend());
                return out;
            }
        }
    }

    std::vector<const Graph*> nontrivial;
    int isolated = 0;
    for (const auto& p : parts)
        if (p.n() == 1)
            ++isolated;
        else
            nontrivial.push_back(&p);

    // (ii) isolated vertices + one regular, non-complete, complete multipartite
    if (isolated >= 1 && nontrivial.size() == 1) {
        const Graph& h = *nontrivial[0];
        auto mp = detail::multipartite_parts(h);
        if (mp.has_value() && mp->size() >= 2 && !detail::is_complete_graph(h)) {
            bool equal_parts = std::all_of(mp->begin(), mp->end(),
                                           [&](int p) { return p == (*mp)[0]; });
            if (equal_parts) {
                out.family = DisconnectedClassification::Family::IsolatedPlusMultipartite;
                out.isolated_count = isolated;
                out.part_sizes = *mp;
                return out;
            }
        }
    }

    // (iii) exactly one isolated vertex + one strongly regular component
    if (isolated == 1 && nontrivial.size() == 1) {
        if (auto srg = check_srg(*nontrivial[0])) {
            out.family = DisconnectedClassification::Family::IsolatedPlusSrg;
            out.isolated_count = 1;
            out.srg_a = srg;
            return out;
        }
    }

    // (iv) two strongly regular components, different valency, identical
    // restricted eigenvalues: same x^2 - (a-c)x - (k-c)
    if (parts.size() == 2) {
        auto s1 = check_srg(parts[0]);
        auto s2 = check_srg(parts[1]);
        if (s1 && s2 && s1->k != s2->k && s1->a - s1->c == s2->a - s2->c &&
            s1->k - s1->c == s2->k - s2->c) {
            out.family = DisconnectedClassification::Family::TwoSrgs;
            out.srg_a = s1;
            out.srg_b = s2;
            double tr = s1->a - s1->c, det = -(s1->k - s1->c);
            double root = std::sqrt(tr * tr - 4.0 * det);
            out.shared_plains = {(tr + root) / 2.0, (tr - root) / 2.0};
            return out;
        }
    }

    return out;
}

inline DisconnectedClassification classify_disconnected(const Graph& g, const Tolerances& tol = {}) {
    return classify_disconnected(g, refined_spectrum(g, tol));
}

/// The 3x3 quotient template of a strongly regular graph partitioned as
/// {vertex, its neighbors, the rest}: [[0,k,0],[1,a,k-a-1],[0,c,k-c]].
/// Rejects parameter sets violating the basic feasibility identity.
inline std::vector<std::vector<Rational>> predicted_deleted_srg_quotient(const SrgParams& p) {
    if (p.n < 2 || p.k < 1 || p.k > p.n - 1 || p.a < 0 || p.a > p.k - 1 || p.c < 0 || p.c > p.k)
        throw std::invalid_argument("infeasible strongly regular parameters");
    if (1LL * p.k * (p.k - p.a - 1) != 1LL * (p.n - p.k - 1) * p.c)
        throw std::invalid_argument("infeasible strongly regular parameters");
    return {{Rational(0), Rational(p.k), Rational(0)},
            {Rational(1), Rational(p.a), Rational(p.k - p.a - 1)},
            {Rational(0), Rational(p.c), Rational(p.k - p.c)}};
}

} // namespace specgraph
