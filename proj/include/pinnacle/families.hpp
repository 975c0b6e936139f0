#pragma once

#include <variant>

#include "pinnacle/graph.hpp"

namespace pinnacle {

inline Graph empty_graph(int n) { return Graph(n, std::vector<std::pair<Vertex, Vertex>>{}); }

inline Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

/// Vertices 0..n-1 in order; vertex i is 1-based vertex i+1.
inline Graph path_graph(int n) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, es);
}

/// K_{m,n}: side V = 0..m-1, side W = m..m+n-1.
inline Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw PreconditionError("complete bipartite graph needs m, n >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex v = 0; v < m; ++v)
        for (Vertex w = 0; w < n; ++w) es.emplace_back(v, m + w);
    return Graph(m + n, es);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), es);
}

struct CompleteFamily {
    int n;
};
struct CompleteBipartiteFamily {
    int m;
    int n;
};
struct CycleFamily {
    int n;
};
struct PathFamily {
    int n;
};

/// One of the graph families with closed-form pinnacle sets.
using Family = std::variant<CompleteFamily, CompleteBipartiteFamily, CycleFamily, PathFamily>;

inline int family_order(const Family& f) {
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CompleteBipartiteFamily>) return x.m + x.n;
            else return x.n;
        },
        f);
}

inline Graph family_graph(const Family& f) {
    return std::visit(
        [](const auto& x) -> Graph {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CompleteFamily>) return complete_graph(x.n);
            else if constexpr (std::is_same_v<T, CompleteBipartiteFamily>) return complete_bipartite_graph(x.m, x.n);
            else if constexpr (std::is_same_v<T, CycleFamily>) return cycle_graph(x.n);
            else return path_graph(x.n);
        },
        f);
}

inline std::string family_name(const Family& f) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CompleteFamily>) return "complete(" + std::to_string(x.n) + ")";
            else if constexpr (std::is_same_v<T, CompleteBipartiteFamily>)
                return "complete_bipartite(" + std::to_string(x.m) + "," + std::to_string(x.n) + ")";
            else if constexpr (std::is_same_v<T, CycleFamily>) return "cycle(" + std::to_string(x.n) + ")";
            else return "path(" + std::to_string(x.n) + ")";
        },
        f);
}

}  // namespace pinnacle
