#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Disjoint union of cliques K_{sizes[0]}, K_{sizes[1]}, ... in listed order.
inline Graph cliques_union(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("cliques-union needs at least one size");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("clique sizes must be >= 1");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<std::pair<int, int>> es;
    int base = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) es.emplace_back(base + i, base + j);
        base += s;
    }
    return Graph::from_edges(n, es);
}

/// Complete multipartite graph with the given part sizes, parts in listed order.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete-multipartite needs at least one part");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("part sizes must be >= 1");
    return complement(cliques_union(parts));
}

inline Graph complete(int n) { return n == 0 ? Graph(0) : cliques_union({n}); }

inline Graph edgeless(int n) { return Graph(n); }

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

/// Star K_{1,k}: hub is vertex 0.
inline Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star needs k >= 1 leaves");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= k; ++i) es.emplace_back(0, i);
    return Graph::from_edges(k + 1, es);
}

/// Rook's graph on an m x m board: vertex (i, j) is i*m + j, adjacent when the
/// cells share a row or a column.
inline Graph rook(int m) {
    if (m < 2) throw std::invalid_argument("rook needs m >= 2");
    std::vector<std::pair<int, int>> es;
    auto id = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            for (int jj = j + 1; jj < m; ++jj) es.emplace_back(id(i, j), id(i, jj));
            for (int ii = i + 1; ii < m; ++ii) es.emplace_back(id(i, j), id(ii, j));
        }
    return Graph::from_edges(m * m, es);
}

/// Row i of the rook's board: one of its maximum cliques.
inline VertexSet rook_row(int m, int i) {
    if (m < 2 || i < 0 || i >= m) throw std::invalid_argument("rook row out of range");
    VertexSet vs(m);
    for (int j = 0; j < m; ++j) vs[j] = i * m + j;
    return vs;
}

/// Column j of the rook's board: the other family of maximum cliques.
inline VertexSet rook_col(int m, int j) {
    if (m < 2 || j < 0 || j >= m) throw std::invalid_argument("rook column out of range");
    VertexSet vs(m);
    for (int i = 0; i < m; ++i) vs[i] = i * m + j;
    return vs;
}

/// Cone: one new apex vertex joined to all of g. The apex is vertex 0.
inline Graph cone_over(const Graph& g) { return join(complete(1), g); }

/// Multicone: s pairwise non-adjacent apexes joined to all of g; apexes first.
inline Graph multicone_over(int s, const Graph& g) {
    if (s < 1) throw std::invalid_argument("multicone needs s >= 1 apexes");
    return join(edgeless(s), g);
}

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, es);
}

enum class FamilyTag {
    CliquesUnion,
    CompleteMultipartite,
    Cycle,
    Star,
    Rook,
    ConeOver,
    MulticoneOver,
    Join,
    DisjointUnion,
};

/// A family constructor request: integer params plus operand graphs where the
/// family is an operation on graphs.
struct FamilySpec {
    FamilyTag tag;
    std::vector<int> params;
    std::vector<Graph> operands;
};

inline Graph build_family(const FamilySpec& spec) {
    auto want = [&](size_t nparams, size_t noperands, const char* what) {
        if (spec.params.size() != nparams || spec.operands.size() != noperands)
            throw std::invalid_argument(std::string("bad arguments for ") + what);
    };
    switch (spec.tag) {
        case FamilyTag::CliquesUnion:
            if (!spec.operands.empty()) throw std::invalid_argument("cliques-union takes no operands");
            return cliques_union(spec.params);
        case FamilyTag::CompleteMultipartite:
            if (!spec.operands.empty()) throw std::invalid_argument("complete-multipartite takes no operands");
            return complete_multipartite(spec.params);
        case FamilyTag::Cycle:
            want(1, 0, "cycle");
            return cycle(spec.params[0]);
        case FamilyTag::Star:
            want(1, 0, "star");
            return star(spec.params[0]);
        case FamilyTag::Rook:
            want(1, 0, "rook");
            return rook(spec.params[0]);
        case FamilyTag::ConeOver:
            want(0, 1, "cone-over");
            return cone_over(spec.operands[0]);
        case FamilyTag::MulticoneOver:
            want(1, 1, "multicone-over");
            return multicone_over(spec.params[0], spec.operands[0]);
        case FamilyTag::Join: {
            if (!spec.params.empty() || spec.operands.size() < 2)
                throw std::invalid_argument("bad arguments for join");
            Graph acc = spec.operands[0];
            for (size_t i = 1; i < spec.operands.size(); ++i) acc = join(acc, spec.operands[i]);
            return acc;
        }
        case FamilyTag::DisjointUnion: {
            if (!spec.params.empty() || spec.operands.size() < 2)
                throw std::invalid_argument("bad arguments for disjoint-union");
            Graph acc = spec.operands[0];
            for (size_t i = 1; i < spec.operands.size(); ++i)
                acc = disjoint_union(acc, spec.operands[i]);
            return acc;
        }
    }
    throw std::invalid_argument("unknown family tag");
}

} // namespace specgraph
