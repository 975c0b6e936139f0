#pragma once

#include "pinnacle/construct.hpp"
#include "pinnacle/graph.hpp"

namespace pinnacle {

/// Result of a single label swap.
struct SwapResult {
    Labeling labeling;
    PinnacleSet pinnacles;
};

/// Swap labels p and p+1. Requires p a pinnacle, p+1 not, p < n.
inline SwapResult swap_up(const Graph& g, const Labeling& lam, Label p) {
    require_labeling_of(g, lam);
    const PinnacleSet before = pinnacles(g, lam);
    if (!before.contains(p)) throw PreconditionError("swap_up: " + std::to_string(p) + " is not a pinnacle");
    if (p >= g.order()) throw PreconditionError("swap_up: " + std::to_string(p) + " has no successor label");
    if (before.contains(p + 1)) throw PreconditionError("swap_up: " + std::to_string(p + 1) + " is already a pinnacle");

    Labeling next = lam.with_swapped(p, p + 1);
    std::vector<Label> expect;
    for (Label l : before)
        if (l != p) expect.push_back(l);
    expect.push_back(p + 1);
    std::sort(expect.begin(), expect.end());
    PinnacleSet after = pinnacles(g, next);
    if (after != PinnacleSet(expect)) throw std::logic_error("swap_up changed another pinnacle");
    return {std::move(next), std::move(after)};
}

/// Swap labels p and p-1 when their vertices are non-adjacent; nothing otherwise.
/// Requires p a pinnacle, p-1 not, and p-1 >= 2.
inline std::optional<SwapResult> swap_down(const Graph& g, const Labeling& lam, Label p) {
    require_labeling_of(g, lam);
    const PinnacleSet before = pinnacles(g, lam);
    if (!before.contains(p)) throw PreconditionError("swap_down: " + std::to_string(p) + " is not a pinnacle");
    if (p - 1 < 2) throw PreconditionError("swap_down: needs p - 1 >= 2");
    if (before.contains(p - 1)) throw PreconditionError("swap_down: " + std::to_string(p - 1) + " is already a pinnacle");
    if (g.adjacent(lam.vertex_of(p), lam.vertex_of(p - 1))) return std::nullopt;

    Labeling next = lam.with_swapped(p, p - 1);
    std::vector<Label> expect;
    for (Label l : before) expect.push_back(l == p ? p - 1 : l);
    std::sort(expect.begin(), expect.end());
    PinnacleSet after = pinnacles(g, next);
    if (after != PinnacleSet(expect)) throw std::logic_error("swap_down changed another pinnacle");
    return SwapResult{std::move(next), std::move(after)};
}

/// Labeling reached plus the pinnacle set after each swap.
struct DominancePath {
    Labeling labeling;
    std::vector<PinnacleSet> steps;
};

/// Walks from pinnacles(g, lam) up to a dominating target by repeated swap_up
/// at p_j, j the largest index with p_j < q_j. Takes sum(q_i - p_i) swaps.
inline DominancePath dominance_path(const Graph& g, const Labeling& lam, const PinnacleSet& target) {
    require_labeling_of(g, lam);
    PinnacleSet cur = pinnacles(g, lam);
    if (cur.size() != target.size()) throw PreconditionError("dominance target has a different size");
    if (target.max() != g.order()) throw PreconditionError("dominance target must contain n");
    for (std::size_t i = 0; i < cur.size(); ++i)
        if (cur[i] > target[i])
            throw PreconditionError("target " + target.to_string() + " does not dominate " + cur.to_string());

    DominancePath out{lam, {}};
    for (;;) {
        std::optional<std::size_t> j;
        for (std::size_t i = cur.size(); i-- > 0;)
            if (cur[i] < target[i]) {
                j = i;
                break;
            }
        if (!j) break;
        SwapResult r = swap_up(g, out.labeling, cur[*j]);
        out.labeling = std::move(r.labeling);
        cur = r.pinnacles;
        out.steps.push_back(std::move(r.pinnacles));
    }
    return out;
}

inline Labeling dominance_transform(const Graph& g, const Labeling& lam, const PinnacleSet& target) {
    return dominance_path(g, lam, target).labeling;
}

/// Rooted trees T_1..T_k covering V(G). parent[v] is -1 exactly for roots.
struct OrderedTreePartition {
    std::vector<Vertex> roots;
    std::vector<Vertex> parent;

    [[nodiscard]] std::size_t size() const { return roots.size(); }

    /// Index of the tree holding each vertex (follows parent pointers).
    [[nodiscard]] std::vector<int> tree_of() const {
        const auto n = parent.size();
        std::vector<int> idx(n, -1);
        for (std::size_t i = 0; i < roots.size(); ++i) idx.at(static_cast<std::size_t>(roots[i])) = static_cast<int>(i);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> chain;
            std::size_t cur = v;
            while (idx[cur] == -1) {
                if (chain.size() > n || parent[cur] < 0 || static_cast<std::size_t>(parent[cur]) >= n)
                    throw PreconditionError("parent pointers do not lead to a root");
                chain.push_back(cur);
                cur = static_cast<std::size_t>(parent[cur]);
            }
            for (std::size_t c : chain) idx[c] = idx[cur];
        }
        return idx;
    }

    [[nodiscard]] std::vector<int> tree_sizes() const {
        std::vector<int> sizes(roots.size(), 0);
        for (int t : tree_of()) ++sizes[static_cast<std::size_t>(t)];
        return sizes;
    }

    /// p_i = |T_1| + ... + |T_i|.
    [[nodiscard]] std::vector<int> prefix_sums() const {
        auto s = tree_sizes();
        std::partial_sum(s.begin(), s.end(), s.begin());
        return s;
    }
};

/// Roots are the pinnacle vertices by ascending label. A vertex next to some
/// root hangs off the first such root; any other vertex hangs off its
/// smallest larger-labeled neighbor, which keeps relabeled trees stable.
inline OrderedTreePartition otp_from_labeling(const Graph& g, const Labeling& lam) {
    require_labeling_of(g, lam);
    const PinnacleSet p = pinnacles(g, lam);
    OrderedTreePartition t;
    std::vector<int> root_rank(static_cast<std::size_t>(g.order()), -1);
    for (Label l : p) {
        root_rank[static_cast<std::size_t>(lam.vertex_of(l))] = static_cast<int>(t.roots.size());
        t.roots.push_back(lam.vertex_of(l));
    }
    t.parent.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (root_rank[static_cast<std::size_t>(v)] != -1) continue;
        Vertex best_root = -1, best_nbr = -1;
        for (Vertex w : g.neighbors(v)) {
            const int r = root_rank[static_cast<std::size_t>(w)];
            if (r != -1 && (best_root == -1 || r < root_rank[static_cast<std::size_t>(best_root)])) best_root = w;
            if (lam[w] > lam[v] && (best_nbr == -1 || lam[w] < lam[best_nbr])) best_nbr = w;
        }
        t.parent[static_cast<std::size_t>(v)] = best_root != -1 ? best_root : best_nbr;
    }
    return t;
}

/// Outcome of validate_otp; empty `reasons` means valid.
struct OtpCheck {
    std::vector<std::string> reasons;
    [[nodiscard]] bool ok() const { return reasons.empty(); }
    explicit operator bool() const { return ok(); }
};

inline OtpCheck validate_otp(const Graph& g, const OrderedTreePartition& t) {
    OtpCheck out;
    auto fail = [&](std::string r) { out.reasons.push_back(std::move(r)); };
    const int n = g.order();
    if (t.parent.size() != static_cast<std::size_t>(n)) {
        fail("parent table has " + std::to_string(t.parent.size()) + " entries for " + std::to_string(n) + " vertices");
        return out;
    }
    if (t.roots.empty()) {
        fail("no trees");
        return out;
    }
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < t.roots.size(); ++i) {
        const Vertex r = t.roots[i];
        if (!g.in_range(r)) {
            fail("root " + std::to_string(r) + " out of range");
            return out;
        }
        if (rank[static_cast<std::size_t>(r)] != -1) fail("vertex " + std::to_string(r) + " is a root twice");
        rank[static_cast<std::size_t>(r)] = static_cast<int>(i);
    }
    for (Vertex v = 0; v < n; ++v) {
        const Vertex p = t.parent[static_cast<std::size_t>(v)];
        const bool is_root = rank[static_cast<std::size_t>(v)] != -1;
        if (is_root && p != -1) fail("root " + std::to_string(v) + " has a parent");
        if (!is_root && p == -1) fail("vertex " + std::to_string(v) + " has no parent and is not a root");
        if (!is_root && p != -1 && (!g.in_range(p) || !g.adjacent(v, p)))
            fail("parent edge (" + std::to_string(v) + "," + std::to_string(p) + ") is not a graph edge");
    }
    if (!out.ok()) return out;

    // (i) roots pairwise non-adjacent
    for (std::size_t i = 0; i < t.roots.size(); ++i)
        for (std::size_t j = i + 1; j < t.roots.size(); ++j)
            if (g.adjacent(t.roots[i], t.roots[j]))
                fail("roots " + std::to_string(t.roots[i]) + " and " + std::to_string(t.roots[j]) + " are adjacent");

    // (ii) parent pointers form trees hanging off the roots
    try {
        (void)t.tree_of();
    } catch (const PreconditionError&) {
        fail("parent pointers contain a cycle");
        return out;
    }

    // (iii) a vertex adjacent to a root is a child of the least-indexed one
    for (Vertex v = 0; v < n; ++v) {
        if (rank[static_cast<std::size_t>(v)] != -1) continue;
        int least = -1;
        for (Vertex w : g.neighbors(v)) {
            const int r = rank[static_cast<std::size_t>(w)];
            if (r != -1 && (least == -1 || r < least)) least = r;
        }
        if (least != -1 && t.parent[static_cast<std::size_t>(v)] != t.roots[static_cast<std::size_t>(least)])
            fail("vertex " + std::to_string(v) + " must hang off root " +
                 std::to_string(t.roots[static_cast<std::size_t>(least)]));
    }
    return out;
}

namespace detail {

/// Basic labeling of one tree of t from `start`, over tree edges only, with
/// labels lo+1..lo+|T| (start gets the top one).
inline void label_tree(const OrderedTreePartition& t, const std::vector<int>& tree, int which, Vertex start, Label lo,
                       std::vector<Label>& out) {
    const auto n = t.parent.size();
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        const Vertex p = t.parent[v];
        if (p >= 0 && tree[v] == which) {
            adj[v].push_back(p);
            adj[static_cast<std::size_t>(p)].push_back(static_cast<Vertex>(v));
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    const Vertex seed[] = {start};
    auto layers = layers_by_distance(static_cast<int>(n), seed, [&](Vertex v) { return std::span<const Vertex>(adj[static_cast<std::size_t>(v)]); });
    std::size_t count = 0;
    for (const auto& l : layers) count += l.size();
    std::vector<Label> pool(count);
    std::iota(pool.begin(), pool.end(), lo + 1);
    assign_layers(layers, pool, out);
}

}  // namespace detail

/// Tree T_i gets the block p_{i-1}+1..p_i by a basic labeling from its root;
/// the pinnacle set of the result is {p_1, ..., p_k}.
inline Labeling labeling_from_otp(const Graph& g, const OrderedTreePartition& t) {
    if (auto check = validate_otp(g, t); !check) throw PreconditionError("invalid ordered tree partition: " + check.reasons.front());
    const auto tree = t.tree_of();
    const auto sums = t.prefix_sums();
    std::vector<Label> out(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < t.roots.size(); ++i)
        detail::label_tree(t, tree, static_cast<int>(i), t.roots[i], i == 0 ? 0 : sums[i - 1], out);
    Labeling lam(out);
    detail::expect_realizes(g, lam, PinnacleSet(sums));
    return lam;
}

/// Trace of drop_min_pinnacle.
struct DropMinTrace {
    OrderedTreePartition otp;
    Labeling tree_labeling;    // labeling_from_otp(otp)
    Vertex new_root = -1;      // x in T_1 with an edge leaving T_1
    Labeling rerooted;         // pinnacles {p_2, ..., p_k}
    Labeling labeling;         // final, pinnacles {q_2, ..., q_k}
};

/// Connected g with pinnacles {q_1 < ... < q_k}, k >= 2: a labeling with
/// pinnacle set {q_2, ..., q_k}.
inline DropMinTrace drop_min_pinnacle_trace(const Graph& g, const Labeling& lam) {
    require_labeling_of(g, lam);
    if (!is_connected(g)) throw PreconditionError("drop_min_pinnacle needs a connected graph");
    const PinnacleSet q = pinnacles(g, lam);
    if (q.size() < 2) throw PreconditionError("drop_min_pinnacle needs at least two pinnacles");

    DropMinTrace tr;
    tr.otp = otp_from_labeling(g, lam);
    tr.tree_labeling = labeling_from_otp(g, tr.otp);
    const auto tree = tr.otp.tree_of();
    for (Vertex v = 0; v < g.order() && tr.new_root == -1; ++v) {
        if (tree[static_cast<std::size_t>(v)] != 0) continue;
        for (Vertex w : g.neighbors(v))
            if (tree[static_cast<std::size_t>(w)] != 0) {
                tr.new_root = v;
                break;
            }
    }
    if (tr.new_root == -1) throw std::logic_error("first tree has no edge leaving it in a connected graph");

    std::vector<Label> labels = tr.tree_labeling.labels();
    detail::label_tree(tr.otp, tree, 0, tr.new_root, 0, labels);
    tr.rerooted = Labeling(labels);
    detail::expect_realizes(g, tr.rerooted, PinnacleSet(tr.otp.prefix_sums()).suffix(1));
    tr.labeling = dominance_transform(g, tr.rerooted, q.suffix(1));
    return tr;
}

inline Labeling drop_min_pinnacle(const Graph& g, const Labeling& lam) { return drop_min_pinnacle_trace(g, lam).labeling; }

}  // namespace pinnacle
