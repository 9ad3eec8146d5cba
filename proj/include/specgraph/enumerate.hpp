#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Exhaustive generation of all graphs on up to 11 vertices, one per
/// isomorphism class. Intended for feeding desk-scale exhaustive checks; the
/// census itself only consumes externally supplied graph6 streams.
///
/// Canonical form: the minimum packed upper-triangle bit string over all
/// vertex orderings that list a canonical (refinement-stable) coloring in
/// nondecreasing order. Twin vertices are interchangeable and only tried once
/// per search node, which keeps highly symmetric graphs cheap.

namespace enumdetail {

constexpr int kMaxEnumN = 11; // 55 triangle bits, fits a 64-bit canonical key

struct SmallGraph {
    int n = 0;
    std::array<uint16_t, kMaxEnumN> rows{};
};

inline int popcount16(uint16_t x) { return __builtin_popcount(x); }

/// Stable coloring: start from degrees, refine by sorted neighbor-color
/// multisets until the partition stops changing. Color ids are assigned by
/// lexicographic signature order, so they are isomorphism-invariant.
inline void stable_coloring(const SmallGraph& g, std::array<int, kMaxEnumN>& col) {
    int n = g.n;
    for (int v = 0; v < n; ++v) col[v] = popcount16(g.rows[v]);
    for (int round = 0; round < n; ++round) {
        // signature: own color followed by sorted neighbor colors
        std::array<std::array<int, kMaxEnumN + 1>, kMaxEnumN> sig{};
        std::array<int, kMaxEnumN> sig_len{};
        for (int v = 0; v < n; ++v) {
            int len = 0;
            sig[v][len++] = col[v];
            for (int u = 0; u < n; ++u)
                if ((g.rows[v] >> u) & 1) sig[v][len++] = col[u];
            std::sort(sig[v].begin() + 1, sig[v].begin() + len);
            sig_len[v] = len;
        }
        std::array<int, kMaxEnumN> order{};
        for (int v = 0; v < n; ++v) order[v] = v;
        auto sig_less = [&](int x, int y) {
            return std::lexicographical_compare(sig[x].begin(), sig[x].begin() + sig_len[x],
                                                sig[y].begin(), sig[y].begin() + sig_len[y]);
        };
        auto sig_eq = [&](int x, int y) {
            return sig_len[x] == sig_len[y] &&
                   std::equal(sig[x].begin(), sig[x].begin() + sig_len[x], sig[y].begin());
        };
        std::sort(order.begin(), order.begin() + n, sig_less);
        std::array<int, kMaxEnumN> next{};
        int id = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && !sig_eq(order[i - 1], order[i])) ++id;
            next[order[i]] = id;
        }
        bool changed = false;
        for (int v = 0; v < n; ++v)
            if (next[v] != col[v]) changed = true;
        col = next;
        if (!changed) break;
    }
}

struct CanonSearch {
    const SmallGraph* g = nullptr;
    std::array<int, kMaxEnumN> colors{};
    std::array<int, kMaxEnumN> placed{};
    std::array<uint64_t, kMaxEnumN> cur_chunks{};
    std::array<uint64_t, kMaxEnumN> best_chunks{};
    uint64_t best_key = 0;
    bool have_best = false;
    uint16_t placed_mask = 0;

    uint64_t chunk_of(int v, int depth) const {
        uint64_t c = 0;
        for (int t = 0; t < depth; ++t)
            c = (c << 1) | ((g->rows[v] >> placed[t]) & 1);
        return c;
    }

    void dfs(int depth, uint64_t key, bool equal) {
        int n = g->n;
        if (depth == n) {
            if (!have_best || key < best_key) {
                have_best = true;
                best_key = key;
                best_chunks = cur_chunks;
            }
            return;
        }
        int cmin = kMaxEnumN + 1;
        for (int v = 0; v < n; ++v)
            if (!((placed_mask >> v) & 1)) cmin = std::min(cmin, colors[v]);

        std::array<int, kMaxEnumN> cand{};
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (((placed_mask >> v) & 1) || colors[v] != cmin) continue;
            bool twin = false;
            for (int i = 0; i < nc && !twin; ++i) {
                int u = cand[i];
                uint16_t off = static_cast<uint16_t>(~((1u << u) | (1u << v)));
                twin = ((g->rows[u] ^ g->rows[v]) & off) == 0;
            }
            if (!twin) cand[nc++] = v;
        }

        std::array<uint64_t, kMaxEnumN> ch{};
        for (int i = 0; i < nc; ++i) ch[i] = chunk_of(cand[i], depth);
        // insertion sort ascending by chunk, so the greedy branch comes first
        for (int i = 1; i < nc; ++i) {
            int v = cand[i];
            uint64_t c = ch[i];
            int j = i - 1;
            while (j >= 0 && ch[j] > c) {
                ch[j + 1] = ch[j];
                cand[j + 1] = cand[j];
                --j;
            }
            ch[j + 1] = c;
            cand[j + 1] = v;
        }

        for (int i = 0; i < nc; ++i) {
            uint64_t c = ch[i];
            bool child_equal = false;
            if (have_best && equal) {
                if (c > best_chunks[depth]) break; // remaining chunks are even larger
                child_equal = c == best_chunks[depth];
            }
            placed[depth] = cand[i];
            cur_chunks[depth] = c;
            placed_mask |= static_cast<uint16_t>(1u << cand[i]);
            dfs(depth + 1, (key << depth) | c, child_equal);
            placed_mask &= static_cast<uint16_t>(~(1u << cand[i]));
        }
    }
};

inline uint64_t canonical_key_impl(const SmallGraph& g) {
    CanonSearch s;
    s.g = &g;
    stable_coloring(g, s.colors);
    s.dfs(0, 0, false);
    return s.best_key;
}

inline SmallGraph unpack_key(int n, uint64_t key) {
    SmallGraph g;
    g.n = n;
    // bits were packed column-major, earliest pair most significant
    int shift = n * (n - 1) / 2;
    for (int p = 0; p < n; ++p)
        for (int i = 0; i < p; ++i) {
            --shift;
            if ((key >> shift) & 1) {
                g.rows[i] |= static_cast<uint16_t>(1u << p);
                g.rows[p] |= static_cast<uint16_t>(1u << i);
            }
        }
    return g;
}

inline SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = g.n();
    for (auto [u, v] : g.edges()) {
        s.rows[u] |= static_cast<uint16_t>(1u << v);
        s.rows[v] |= static_cast<uint16_t>(1u << u);
    }
    return s;
}

inline Graph to_graph(const SmallGraph& s) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < s.n; ++v)
        for (int u = v + 1; u < s.n; ++u)
            if ((s.rows[v] >> u) & 1) es.emplace_back(v, u);
    return Graph::from_edges(s.n, es);
}

inline const std::vector<uint64_t>& cached_keys(int n);

inline std::vector<uint64_t> compute_keys(int n) {
    if (n == 1) return {0};
    const std::vector<uint64_t>& parents = cached_keys(n - 1);
    std::unordered_set<uint64_t> seen;
    for (uint64_t pk : parents) {
        SmallGraph parent = unpack_key(n - 1, pk);
        for (uint32_t sub = 0; sub < (1u << (n - 1)); ++sub) {
            SmallGraph child = parent;
            child.n = n;
            child.rows[n - 1] = static_cast<uint16_t>(sub);
            for (int v = 0; v < n - 1; ++v)
                if ((sub >> v) & 1) child.rows[v] |= static_cast<uint16_t>(1u << (n - 1));
            seen.insert(canonical_key_impl(child));
        }
    }
    std::vector<uint64_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

inline const std::vector<uint64_t>& cached_keys(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<uint64_t>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    if (n > 1) cached_keys(n - 1); // recurse before computing, outside the lock
    auto keys = std::make_unique<std::vector<uint64_t>>(compute_keys(n));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(keys));
    return *it->second;
}

} // namespace enumdetail

/// Canonical 64-bit key of a graph on at most 11 vertices; equal exactly for
/// isomorphic graphs.
inline uint64_t canonical_key(const Graph& g) {
    if (g.n() > enumdetail::kMaxEnumN)
        throw std::invalid_argument("canonical_key supports at most 11 vertices");
    if (g.n() == 0) return 0;
    return enumdetail::canonical_key_impl(enumdetail::to_small(g));
}

/// The canonically labeled representative of g's isomorphism class.
inline Graph canonical_graph(const Graph& g) {
    if (g.n() > enumdetail::kMaxEnumN)
        throw std::invalid_argument("canonical_graph supports at most 11 vertices");
    if (g.n() == 0) return Graph(0);
    return enumdetail::to_graph(enumdetail::unpack_key(g.n(), canonical_key(g)));
}

/// All graphs on exactly n vertices, one per isomorphism class, in ascending
/// canonical-key order. Results are cached per n for the process lifetime.
inline std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > enumdetail::kMaxEnumN)
        throw std::invalid_argument("all_graphs supports 0 <= n <= 11");
    if (n == 0) return {Graph(0)};
    std::vector<Graph> out;
    const auto& keys = enumdetail::cached_keys(n);
    out.reserve(keys.size());
    for (uint64_t k : keys) out.push_back(enumdetail::to_graph(enumdetail::unpack_key(n, k)));
    return out;
}

/// Visits all graphs with 1 <= n <= max_n in (n, canonical key) order.
template <typename Fn>
void for_each_graph(int max_n, Fn&& fn) {
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : all_graphs(n)) fn(g);
}

} // namespace specgraph
