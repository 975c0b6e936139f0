#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pinnacle {

/// Vertices are 0-based indices; labels are 1-based.
using Vertex = int;
using Label = int;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violated an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
    explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }
    [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Strictly increasing set of positive labels, compared lexicographically.
class PinnacleSet {
public:
    PinnacleSet() = default;
    PinnacleSet(std::initializer_list<Label> ls) : PinnacleSet(std::vector<Label>(ls)) {}
    explicit PinnacleSet(std::vector<Label> ls) : labels_(std::move(ls)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] < 1) throw PreconditionError("pinnacle set labels must be positive");
            if (i > 0 && labels_[i] <= labels_[i - 1])
                throw PreconditionError("pinnacle set must be strictly increasing");
        }
    }

    /// The interval [a, b]; a single element when a == b.
    static PinnacleSet interval(Label a, Label b) {
        if (a < 1 || b < a) throw PreconditionError("invalid interval");
        std::vector<Label> ls(static_cast<std::size_t>(b - a + 1));
        std::iota(ls.begin(), ls.end(), a);
        return PinnacleSet(std::move(ls));
    }

    /// M_{n,k} = {n-k+1, ..., n}.
    static PinnacleSet top(int n, int k) {
        if (k < 1 || k > n) throw PreconditionError("top set needs 1 <= k <= n");
        return interval(n - k + 1, n);
    }

    /// Bit (label - 1) set for each member.
    static PinnacleSet from_mask(std::uint64_t mask) {
        std::vector<Label> ls;
        for (Label l = 1; mask != 0; ++l, mask >>= 1)
            if (mask & 1U) ls.push_back(l);
        return PinnacleSet(std::move(ls));
    }

    [[nodiscard]] std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (Label l : labels_) {
            if (l > 64) throw PreconditionError("label too large for mask");
            m |= std::uint64_t{1} << (l - 1);
        }
        return m;
    }

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] bool empty() const { return labels_.empty(); }
    [[nodiscard]] Label operator[](std::size_t i) const { return labels_[i]; }
    [[nodiscard]] Label max() const {
        if (labels_.empty()) throw PreconditionError("empty pinnacle set has no maximum");
        return labels_.back();
    }
    [[nodiscard]] bool contains(Label l) const {
        return std::binary_search(labels_.begin(), labels_.end(), l);
    }
    [[nodiscard]] auto begin() const { return labels_.begin(); }
    [[nodiscard]] auto end() const { return labels_.end(); }
    [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }

    /// Elements from index `from` onward.
    [[nodiscard]] PinnacleSet suffix(std::size_t from) const {
        return PinnacleSet(std::vector<Label>(labels_.begin() + static_cast<std::ptrdiff_t>(std::min(from, labels_.size())),
                                              labels_.end()));
    }

    [[nodiscard]] std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(labels_[i]);
        }
        return out + "}";
    }

    friend auto operator<=>(const PinnacleSet&, const PinnacleSet&) = default;

private:
    std::vector<Label> labels_;
};

inline std::ostream& operator<<(std::ostream& os, const PinnacleSet& s) { return os << s.to_string(); }

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(checked_order(n))) {}
    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (const Edge& e : edges) add(e);
        finish();
    }
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
        for (auto [a, b] : edges) add(Edge(a, b));
        finish();
    }
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
        for (auto [a, b] : edges) add(Edge(a, b));
        finish();
    }

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    [[nodiscard]] bool has_edge(const Edge& e) const {
        return e.u != e.v && in_range(e.u) && in_range(e.v) && adjacent(e.u, e.v);
    }
    [[nodiscard]] bool in_range(Vertex v) const { return v >= 0 && v < n_; }

    void check_vertex(Vertex v) const {
        if (!in_range(v))
            throw PreconditionError("vertex " + std::to_string(v) + " out of range for graph of order " +
                                    std::to_string(n_));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    static int checked_order(int n) {
        if (n < 0) throw PreconditionError("vertex count must be non-negative");
        return n;
    }
    void add(const Edge& e) {
        if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        check_vertex(e.u);
        check_vertex(e.v);
        edges_.push_back(e);
    }
    void finish() {
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw PreconditionError("duplicate edge");
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// Bijection from vertices to {1, ..., n}.
class Labeling {
public:
    Labeling() = default;
    Labeling(std::initializer_list<Label> ls) : Labeling(std::vector<Label>(ls)) {}
    explicit Labeling(std::vector<Label> ls) : labels_(std::move(ls)), vertex_of_(labels_.size(), -1) {
        const auto n = static_cast<Label>(labels_.size());
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            const Label l = labels_[v];
            if (l < 1 || l > n) throw PreconditionError("label " + std::to_string(l) + " outside 1.." + std::to_string(n));
            if (vertex_of_[static_cast<std::size_t>(l - 1)] != -1)
                throw PreconditionError("label " + std::to_string(l) + " used twice");
            vertex_of_[static_cast<std::size_t>(l - 1)] = static_cast<Vertex>(v);
        }
    }

    [[nodiscard]] int size() const { return static_cast<int>(labels_.size()); }
    [[nodiscard]] Label operator[](Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] Vertex vertex_of(Label l) const { return vertex_of_.at(static_cast<std::size_t>(l - 1)); }
    [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }

    /// Exchanges the labels a and b between their vertices.
    [[nodiscard]] Labeling with_swapped(Label a, Label b) const {
        std::vector<Label> ls = labels_;
        std::swap(ls[static_cast<std::size_t>(vertex_of(a))], ls[static_cast<std::size_t>(vertex_of(b))]);
        return Labeling(std::move(ls));
    }

    friend bool operator==(const Labeling& a, const Labeling& b) { return a.labels_ == b.labels_; }

private:
    std::vector<Label> labels_;
    std::vector<Vertex> vertex_of_;
};

inline void require_labeling_of(const Graph& g, const Labeling& lam) {
    if (g.order() == 0) throw PreconditionError("labeling-dependent operations need a non-empty graph");
    if (lam.size() != g.order())
        throw PreconditionError("labeling has " + std::to_string(lam.size()) + " entries, graph has " +
                                std::to_string(g.order()) + " vertices");
}

/// Pinnacles of an injective vertex -> label assignment (labels need not be 1..n).
inline PinnacleSet pinnacles_of_assignment(const Graph& g, std::span<const Label> labels) {
    if (labels.size() != static_cast<std::size_t>(g.order()))
        throw PreconditionError("assignment length does not match graph order");
    std::vector<char> is_pinnacle(labels.size(), 1);
    for (const Edge& e : g.edges()) {
        const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        is_pinnacle[labels[u] < labels[v] ? u : v] = 0;
    }
    std::vector<Label> out;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (is_pinnacle[v]) out.push_back(labels[v]);
    std::sort(out.begin(), out.end());
    return PinnacleSet(std::move(out));
}

/// Labels strictly greater than every neighbor's label; isolated vertices always count.
inline PinnacleSet pinnacles(const Graph& g, const Labeling& lam) {
    require_labeling_of(g, lam);
    return pinnacles_of_assignment(g, lam.labels());
}

/// Vertices carrying the given labels.
inline VertexSet vertices_with_labels(const Labeling& lam, const PinnacleSet& s) {
    std::vector<Vertex> vs;
    for (Label l : s) vs.push_back(lam.vertex_of(l));
    return VertexSet(std::move(vs));
}

inline void check_members(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    check_members(g, s);
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (s.contains(w)) return false;
    return true;
}

/// Component index per vertex, numbered in order of smallest member.
inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    const auto comp = component_ids(g);
    const int c = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(c));
    for (Vertex v = 0; v < g.order(); ++v) parts[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<VertexSet> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.emplace_back(std::move(p));
    return out;
}

inline int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

/// True iff every component of g contains a member of s.
inline bool reaches_all(const Graph& g, const VertexSet& s) {
    check_members(g, s);
    const auto comp = component_ids(g);
    const int c = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<char> hit(static_cast<std::size_t>(c), 0);
    for (Vertex v : s) hit[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

/// Distance layers (D_0 = seeds, D_1, ..., D_d) under a caller-supplied adjacency.
template <class NeighborFn>
std::vector<std::vector<Vertex>> layers_by_distance(int n, std::span<const Vertex> seeds, NeighborFn&& neighbors,
                                                    std::vector<char>* inside = nullptr) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> layers;
    std::vector<Vertex> frontier;
    for (Vertex s : seeds) {
        if (dist[static_cast<std::size_t>(s)] == -1) {
            dist[static_cast<std::size_t>(s)] = 0;
            frontier.push_back(s);
        }
    }
    std::sort(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
        layers.push_back(frontier);
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (Vertex w : neighbors(v)) {
                if (inside && !(*inside)[static_cast<std::size_t>(w)]) continue;
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = static_cast<int>(layers.size());
                    next.push_back(w);
                }
            }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return layers;
}

/// BFS layers from a seed set; every vertex must be reachable.
inline std::vector<VertexSet> bfs_layers(const Graph& g, const VertexSet& seeds) {
    if (seeds.empty()) throw PreconditionError("bfs_layers needs at least one seed");
    check_members(g, seeds);
    auto raw = layers_by_distance(g.order(), seeds.members(), [&](Vertex v) { return g.neighbors(v); });
    std::size_t covered = 0;
    std::vector<VertexSet> out;
    for (auto& layer : raw) {
        covered += layer.size();
        out.emplace_back(std::move(layer));
    }
    if (covered != static_cast<std::size_t>(g.order()))
        throw PreconditionError("vertex unreachable from the seed set");
    return out;
}

inline Graph delete_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e))
        throw PreconditionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - 1);
    for (const Edge& f : g.edges())
        if (f != e) kept.push_back(f);
    return Graph(g.order(), kept);
}

}  // namespace pinnacle
