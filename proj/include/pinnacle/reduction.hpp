#pragma once

#include "pinnacle/graph.hpp"

namespace pinnacle {

enum class DecisionKind { independent_set, pinnacle_size, pinnacle_existence };

/// A yes/no question about a graph. Size questions ask for "at least k".
struct DecisionInstance {
    DecisionKind kind = DecisionKind::independent_set;
    Graph graph;
    std::optional<int> k;
    std::optional<PinnacleSet> target_set;

    static DecisionInstance independent_set(Graph g, int k) {
        return {DecisionKind::independent_set, std::move(g), k, std::nullopt};
    }
    static DecisionInstance pinnacle_size(Graph g, int k) {
        return {DecisionKind::pinnacle_size, std::move(g), k, std::nullopt};
    }
    static DecisionInstance pinnacle_existence(Graph g, PinnacleSet s) {
        return {DecisionKind::pinnacle_existence, std::move(g), std::nullopt, std::move(s)};
    }

    void validate() const {
        const bool wants_set = kind == DecisionKind::pinnacle_existence;
        if (wants_set != target_set.has_value() || wants_set == k.has_value())
            throw PreconditionError("decision instance carries the wrong parameters for its kind");
    }
};

/// H = G plus a vertex adjacent to every original vertex (index n).
inline Graph add_universal_vertex(const Graph& g) {
    std::vector<Edge> es = g.edges();
    for (Vertex v = 0; v < g.order(); ++v) es.emplace_back(v, g.order());
    return Graph(g.order() + 1, es);
}

namespace detail {

inline const DecisionInstance& require_independent_set(const DecisionInstance& inst) {
    inst.validate();
    if (inst.kind != DecisionKind::independent_set) throw PreconditionError("expected an independent-set instance");
    if (inst.graph.order() == 0) throw PreconditionError("reduction needs a non-empty graph");
    if (*inst.k < 1) throw PreconditionError("k must be >= 1");
    return inst;
}

}  // namespace detail

/// (G, k) -> (H, k), H connected. For k = 1 the instance passes through as is:
/// both questions are yes on any non-empty graph.
inline DecisionInstance reduce_to_pinnacle_size(const DecisionInstance& inst) {
    const auto& in = detail::require_independent_set(inst);
    const int k = *in.k;
    if (k == 1 || is_connected(in.graph)) return DecisionInstance::pinnacle_size(in.graph, k);
    return DecisionInstance::pinnacle_size(add_universal_vertex(in.graph), k);
}

/// (G, k) -> (H, M_{|H|,k}), H connected (gadget added when G is not).
inline DecisionInstance reduce_to_pinnacle_existence(const DecisionInstance& inst) {
    const auto& in = detail::require_independent_set(inst);
    Graph h = is_connected(in.graph) ? in.graph : add_universal_vertex(in.graph);
    if (*in.k > h.order()) throw PreconditionError("k exceeds the graph order");
    PinnacleSet m = PinnacleSet::top(h.order(), *in.k);
    return DecisionInstance::pinnacle_existence(std::move(h), std::move(m));
}

/// |W| >= k, W independent, and W meets every component.
inline bool verify_size_certificate(const Graph& g, int k, const VertexSet& witness) {
    check_members(g, witness);
    return static_cast<int>(witness.size()) >= k && is_independent(g, witness) && reaches_all(g, witness);
}

/// pinnacles(g, lam) == s.
inline bool verify_existence_certificate(const Graph& g, const PinnacleSet& s, const Labeling& lam) {
    return pinnacles(g, lam) == s;
}

}  // namespace pinnacle
