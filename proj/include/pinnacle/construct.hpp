#pragma once

#include "pinnacle/characterize.hpp"
#include "pinnacle/families.hpp"
#include "pinnacle/graph.hpp"

namespace pinnacle {

/// A graph with a labeling whose pinnacle set is `claimed` (checked on construction).
struct RealizedInstance {
    Graph graph;
    Labeling labeling;
    PinnacleSet claimed;

    RealizedInstance(Graph g, Labeling lam, PinnacleSet s)
        : graph(std::move(g)), labeling(std::move(lam)), claimed(std::move(s)) {
        if (pinnacles(graph, labeling) != claimed)
            throw std::logic_error("constructed labeling does not realize " + claimed.to_string());
    }
};

enum class Shape { forest, tree };

namespace detail {

/// Hands each layer the largest unused pool labels; ascending vertices get ascending labels.
inline void assign_layers(const std::vector<std::vector<Vertex>>& layers, std::span<const Label> pool_sorted,
                          std::vector<Label>& out) {
    auto next = pool_sorted.size();
    for (const auto& layer : layers) {
        next -= layer.size();
        for (std::size_t i = 0; i < layer.size(); ++i)
            out[static_cast<std::size_t>(layer[i])] = pool_sorted[next + i];
    }
}

inline std::vector<Label> sorted_pool(std::vector<Label> pool) {
    std::sort(pool.begin(), pool.end());
    if (std::adjacent_find(pool.begin(), pool.end()) != pool.end())
        throw PreconditionError("label pool has repeated labels");
    return pool;
}

inline void expect_realizes(const Graph& g, const Labeling& lam, const PinnacleSet& s) {
    if (pinnacles(g, lam) != s)
        throw std::logic_error("construction failed to realize " + s.to_string());
}

}  // namespace detail

/// Basic labeling of (g, pool, seeds): BFS layers from the seeds take the
/// largest remaining pool labels in turn. The pinnacles are the top |seeds|
/// labels handed out. Returns a vertex -> label assignment.
inline std::vector<Label> basic_labeling(const Graph& g, std::vector<Label> pool, const VertexSet& seeds) {
    if (!is_independent(g, seeds)) throw PreconditionError("basic labeling seeds must be independent");
    if (pool.size() < static_cast<std::size_t>(g.order())) throw PreconditionError("label pool too small");
    pool = detail::sorted_pool(std::move(pool));
    const auto layers = bfs_layers(g, seeds);
    std::vector<std::vector<Vertex>> raw;
    for (const auto& l : layers) raw.push_back(l.members());
    std::vector<Label> out(static_cast<std::size_t>(g.order()), 0);
    // Only the top n pool labels are ever used.
    std::span<const Label> used(pool.data() + (pool.size() - static_cast<std::size_t>(g.order())),
                                static_cast<std::size_t>(g.order()));
    detail::assign_layers(raw, used, out);
    return out;
}

/// Basic labeling with pool [n].
inline Labeling basic_labeling(const Graph& g, const VertexSet& seeds) {
    std::vector<Label> pool(static_cast<std::size_t>(g.order()));
    std::iota(pool.begin(), pool.end(), 1);
    return Labeling(basic_labeling(g, std::move(pool), seeds));
}

/// A graph on max(s) vertices having s as a pinnacle set.
///
/// Forest: disjoint paths of sizes s_i - s_{i-1}, labeled consecutively.
/// Tree: adjacent centers x (label 1, leaves s_1..s_{k-1}) and y (label n,
/// leaves the remaining labels); K_1 for s = {1}. The tree shape is impossible
/// when 1 is in s and |s| >= 2.
inline RealizedInstance realize_any_set(const PinnacleSet& s, Shape shape) {
    if (s.empty()) throw PreconditionError("target set must be non-empty");
    const int n = s.max();
    const int k = static_cast<int>(s.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Label> labels(static_cast<std::size_t>(n), 0);

    if (shape == Shape::forest) {
        Vertex v = 0;
        Label prev = 0;
        for (Label si : s) {
            for (Label l = prev + 1; l <= si; ++l, ++v) {
                labels[static_cast<std::size_t>(v)] = l;
                if (l > prev + 1) edges.emplace_back(v - 1, v);
            }
            prev = si;
        }
        return {Graph(n, edges), Labeling(labels), s};
    }

    if (s.contains(1) && k >= 2)
        throw PreconditionError("no connected graph has " + s.to_string() + " as a pinnacle set (1 is in it)");
    if (n == 1) return {Graph(1), Labeling{1}, s};

    const Vertex x = 0, y = 1;
    edges.emplace_back(x, y);
    labels[x] = 1;
    labels[y] = n;
    Vertex next = 2;
    for (int i = 0; i + 1 < k; ++i, ++next) {
        edges.emplace_back(x, next);
        labels[static_cast<std::size_t>(next)] = s[static_cast<std::size_t>(i)];
    }
    for (Label l = 2; l < n; ++l) {
        if (s.contains(l)) continue;
        edges.emplace_back(y, next);
        labels[static_cast<std::size_t>(next++)] = l;
    }
    return {Graph(n, edges), Labeling(labels), s};
}

/// Labeling with pinnacle set M_{n,k}, or nothing when g has no size-k pinnacle set.
inline std::optional<Labeling> realize_max_set(const Graph& g, int k, int max_n_guard = kDefaultWitnessMaxN) {
    auto witness = has_size_k_pinnacle_set(g, k, max_n_guard);
    if (!witness) return std::nullopt;
    Labeling lam = basic_labeling(g, *witness);
    detail::expect_realizes(g, lam, PinnacleSet::top(g.order(), k));
    return lam;
}

/// C_n labeling realizing s. Vertex i (1-based around the cycle) carries s_j at
/// i = 2j, fresh small labels at the odd positions up to 2k-1, n at i = n, and
/// the leftover labels increasing on 2k..n-1.
inline Labeling cycle_labeling(int n, const PinnacleSet& s) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    if (!is_pinnacle_set_of_family(CycleFamily{n}, s))
        throw PreconditionError(s.to_string() + " is not a pinnacle set of C_" + std::to_string(n));
    const int k = static_cast<int>(s.size());
    std::vector<Label> rest;
    for (Label l = 1; l <= n; ++l)
        if (!s.contains(l)) rest.push_back(l);

    std::vector<Label> lab(static_cast<std::size_t>(n + 1), 0);  // 1-based
    lab[static_cast<std::size_t>(n)] = n;
    for (int j = 1; j <= k - 1; ++j) lab[static_cast<std::size_t>(2 * j)] = s[static_cast<std::size_t>(j - 1)];
    std::size_t r = 0;
    for (int i = 0; i <= k - 1; ++i) lab[static_cast<std::size_t>(2 * i + 1)] = rest[r++];
    for (int v = 2 * k; v <= n - 1; ++v) lab[static_cast<std::size_t>(v)] = rest[r++];

    Labeling lam(std::vector<Label>(lab.begin() + 1, lab.end()));
    detail::expect_realizes(cycle_graph(n), lam, s);
    return lam;
}

/// P_n labeling realizing s: s_j at odd vertex 2j-1, fresh small labels at the
/// even vertices up to 2k-2, n at vertex n, leftovers increasing on 2k-1..n-1.
inline Labeling path_labeling(int n, const PinnacleSet& s) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    if (!is_pinnacle_set_of_family(PathFamily{n}, s))
        throw PreconditionError(s.to_string() + " is not a pinnacle set of P_" + std::to_string(n));
    if (n == 1) return Labeling{1};
    const int k = static_cast<int>(s.size());
    std::vector<Label> rest;
    for (Label l = 1; l <= n; ++l)
        if (!s.contains(l)) rest.push_back(l);

    std::vector<Label> lab(static_cast<std::size_t>(n + 1), 0);
    lab[static_cast<std::size_t>(n)] = n;
    for (int j = 1; j <= k - 1; ++j) lab[static_cast<std::size_t>(2 * j - 1)] = s[static_cast<std::size_t>(j - 1)];
    std::size_t r = 0;
    for (int i = 1; i <= k - 1; ++i) lab[static_cast<std::size_t>(2 * i)] = rest[r++];
    for (int v = 2 * k - 1; v <= n - 1; ++v) lab[static_cast<std::size_t>(v)] = rest[r++];

    Labeling lam(std::vector<Label>(lab.begin() + 1, lab.end()));
    detail::expect_realizes(path_graph(n), lam, s);
    return lam;
}

/// K_{m,n} labeling with pinnacle set [k_start, m+n]. With k' = k_start - n,
/// V-vertex j gets j below k' and n+j from k' on; W gets [k', n+k'-1].
inline Labeling complete_bipartite_labeling(int m, int n, int k_start) {
    if (n < 1 || m < n) throw PreconditionError("need m >= n >= 1");
    if (k_start < n + 1 || k_start > m + n)
        throw PreconditionError("k_start must lie in [" + std::to_string(n + 1) + ", " + std::to_string(m + n) + "]");
    const int kp = k_start - n;
    std::vector<Label> lab(static_cast<std::size_t>(m + n));
    for (int j = 1; j <= m; ++j) lab[static_cast<std::size_t>(j - 1)] = j < kp ? j : n + j;
    for (int t = 0; t < n; ++t) lab[static_cast<std::size_t>(m + t)] = kp + t;
    Labeling lam(lab);
    detail::expect_realizes(complete_bipartite_graph(m, n), lam, PinnacleSet::interval(k_start, m + n));
    return lam;
}

}  // namespace pinnacle
