#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specgraph {

using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1: no loops, no multi-edges.
/// Value type, frozen after construction; build with from_edges or a family
/// constructor from families.hpp.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<size_t>(n_) * n_, false) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[idx(u, v)];
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u) d += adj_[idx(v, u)];
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    long long edge_count() const {
        long long e = 0;
        for (int v = 0; v < n_; ++v) e += degree(v);
        return e / 2;
    }

    /// Edges as (i, j) with i < j, in column-major upper-triangle order:
    /// the bit order shared with the graph6 encoding.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (adj_[idx(i, j)]) es.emplace_back(i, j);
        return es;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> ns;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_[idx(v, u)]) ns.push_back(u);
        return ns;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<bool> adj_;

    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

    static int checked_order(int n) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        if (n > 4096) throw std::invalid_argument("graph order exceeds supported bound (4096)");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range: " + std::to_string(v));
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[idx(u, v)] = true;
        adj_[idx(v, u)] = true;
    }
};

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (!g.adjacent(i, j)) es.emplace_back(i, j);
    return Graph::from_edges(g.n(), es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
    return Graph::from_edges(a.n() + b.n(), es);
}

/// Disjoint union plus every edge between the two sides; a's vertices come first.
inline Graph join(const Graph& a, const Graph& b) {
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) es.emplace_back(u, a.n() + v);
    return Graph::from_edges(a.n() + b.n(), es);
}

/// Remove vertex v; the remaining vertices keep their relative order.
inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex index out of range");
    auto shift = [v](int u) { return u > v ? u - 1 : u; };
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) es.emplace_back(shift(a), shift(b));
    return Graph::from_edges(g.n() - 1, es);
}

/// Relabel: vertex v of g becomes vertex new_label[v]. new_label must be a permutation.
inline Graph relabel(const Graph& g, const std::vector<int>& new_label) {
    if (static_cast<int>(new_label.size()) != g.n())
        throw std::invalid_argument("relabeling has wrong length");
    std::vector<bool> seen(g.n(), false);
    for (int l : new_label) {
        if (l < 0 || l >= g.n() || seen[l]) throw std::invalid_argument("relabeling is not a permutation");
        seen[l] = true;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(new_label[u], new_label[v]);
    return Graph::from_edges(g.n(), es);
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (v < 0 || v >= g.n()) throw std::out_of_range("vertex index out of range");
        if (pos[v] >= 0) throw std::invalid_argument("duplicate vertex in set");
        pos[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(vs.size()), es);
}

/// Toggle every edge/non-edge between u and its complement; edges inside
/// either side are untouched. Involutive, and switching on the full vertex
/// set or the empty set is the identity.
inline Graph seidel_switch(const Graph& g, const VertexSet& u) {
    std::vector<bool> in_u(g.n(), false);
    for (int v : u) {
        if (v < 0 || v >= g.n()) throw std::out_of_range("vertex index out of range");
        if (in_u[v]) throw std::invalid_argument("duplicate vertex in switching set");
        in_u[v] = true;
    }
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i) {
            bool crossing = in_u[i] != in_u[j];
            bool adj = g.adjacent(i, j);
            if (crossing ? !adj : adj) es.emplace_back(i, j);
        }
    return Graph::from_edges(g.n(), es);
}

/// Vertex classes of the connected components, each sorted, ordered by
/// smallest member. Empty graph gives an empty list.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> visited(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (visited[s]) continue;
        std::vector<int> comp, stack{s};
        visited[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w = 0; w < g.n(); ++w)
                if (!visited[w] && g.adjacent(v, w)) {
                    visited[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

/// Vertices grouped by degree. Classes are ordered by ascending valency;
/// valencies[i] is the common degree of classes[i].
struct ValencyPartition {
    std::vector<int> valencies;
    std::vector<std::vector<int>> classes;

    int s() const { return static_cast<int>(valencies.size()); }
};

inline ValencyPartition valency_partition(const Graph& g) {
    std::vector<int> deg = g.degrees();
    std::vector<int> distinct = deg;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    ValencyPartition vp;
    vp.valencies = distinct;
    vp.classes.resize(distinct.size());
    for (int v = 0; v < g.n(); ++v) {
        size_t i = std::lower_bound(distinct.begin(), distinct.end(), deg[v]) - distinct.begin();
        vp.classes[i].push_back(v);
    }
    return vp;
}

inline bool is_regular(const Graph& g) { return valency_partition(g).s() <= 1; }

inline bool is_biregular(const Graph& g) { return valency_partition(g).s() == 2; }

} // namespace specgraph
