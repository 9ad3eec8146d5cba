#pragma once

#include <optional>
#include <stdexcept>

#include "specgraph/classify.hpp"
#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

/// Everything the reporting layer needs about one graph, computed in one
/// pass. Optional members are populated only when their preconditions hold:
///   strong      n >= 2
///   sb          connected (engaged iff the graph is strongly biregular)
///   rowlinson   connected with exact minimal polynomial degree 3
///   family      disconnected with index (2,2)
struct GraphAnalysis {
    Graph g;
    int n = 0;
    long long e = 0;
    bool connected = false;
    ValencyPartition vp;
    QuotientMatrix valency_quot;
    EigenReport er;
    RefinedSpectrum rs;
    std::optional<StrongClassification> strong;
    std::optional<StronglyBiregular> sb;
    std::optional<RowlinsonReport> rowlinson;
    std::optional<DisconnectedClassification> family;

    int t() const { return vp.s(); }
    int d() const { return static_cast<int>(er.groups.size()); }
    bool equitable() const { return valency_quot.equitable; }
};

inline const char* strong_verdict_string(const GraphAnalysis& a) {
    if (!a.strong) return "not-strong";
    return to_string(a.strong->verdict);
}

inline GraphAnalysis analyze(const Graph& g, const Tolerances& tol = {}) {
    if (g.n() < 1) throw std::invalid_argument("analyze needs n >= 1");
    GraphAnalysis a;
    a.g = g;
    a.n = g.n();
    a.e = g.edge_count();
    a.connected = is_connected(g);
    a.vp = valency_partition(g);
    a.valency_quot = valency_quotient(g);
    a.er = eigendecompose(g, tol);
    a.rs = refined_spectrum(g, a.er, tol);
    if (a.n >= 2) a.strong = check_strong(g);
    if (a.connected) {
        a.sb = check_strongly_biregular(g);
        if (minimal_polynomial_degree(g) == 3) a.rowlinson = check_rowlinson(g);
    } else if (a.rs.r == 2 && a.rs.s == 2) {
        a.family = classify_disconnected(g, a.rs);
    }
    return a;
}

} // namespace specgraph
