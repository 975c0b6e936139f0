#pragma once

#include "pinnacle/families.hpp"
#include "pinnacle/graph.hpp"

namespace pinnacle {

inline constexpr int kDefaultWitnessMaxN = 24;

/// values[i] = number of labels outside s below the (i+1)-th element.
struct EllProfile {
    std::vector<int> values;
};

inline EllProfile ell(const PinnacleSet& s) {
    EllProfile p;
    p.values.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) p.values.push_back(s[i] - static_cast<int>(i + 1));
    return p;
}

namespace detail {

inline bool complete_member(const CompleteFamily& f, const PinnacleSet& s) {
    if (f.n < 1) throw PreconditionError("complete family needs n >= 1");
    return s.size() == 1 && s[0] == f.n;
}

inline bool bipartite_member(const CompleteBipartiteFamily& f, const PinnacleSet& s) {
    if (f.n < 1 || f.m < f.n) throw PreconditionError("complete bipartite family needs m >= n >= 1");
    if (s.empty() || s.max() != f.m + f.n) return false;
    // Strictly increasing with max m+n: an interval iff the span equals the size.
    const int start = s[0];
    return s.max() - start + 1 == static_cast<int>(s.size()) && start >= f.n + 1;
}

// `slack` = 1 for cycles (ell(s_i) >= i+1), 0 for paths (ell(s_i) >= i).
inline bool gapped_member(int n, std::size_t max_k, int slack, const PinnacleSet& s) {
    const std::size_t k = s.size();
    if (k == 0 || k > max_k || s.max() != n) return false;
    const EllProfile p = ell(s);
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (p.values[i] < static_cast<int>(i + 1) + slack) return false;
    return true;
}

inline bool cycle_member(const CycleFamily& f, const PinnacleSet& s) {
    if (f.n < 3) throw PreconditionError("cycle family needs n >= 3");
    return gapped_member(f.n, static_cast<std::size_t>(f.n / 2), 1, s);
}

inline bool path_member(const PathFamily& f, const PinnacleSet& s) {
    if (f.n < 1) throw PreconditionError("path family needs n >= 1");
    // P_1 is a single isolated vertex: Pin(P_1) = {{1}}.
    if (f.n == 1) return s == PinnacleSet{1};
    return gapped_member(f.n, static_cast<std::size_t>((f.n + 1) / 2), 0, s);
}

}  // namespace detail

/// Closed-form membership test for complete, complete bipartite, cycle and path graphs.
inline bool is_pinnacle_set_of_family(const Family& family, const PinnacleSet& s) {
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, CompleteFamily>) return detail::complete_member(f, s);
            else if constexpr (std::is_same_v<T, CompleteBipartiteFamily>) return detail::bipartite_member(f, s);
            else if constexpr (std::is_same_v<T, CycleFamily>) return detail::cycle_member(f, s);
            else return detail::path_member(f, s);
        },
        family);
}

/// Every size-k set accepted by the family predicate, sorted.
inline std::vector<PinnacleSet> family_pinnacle_sets(const Family& family, int k) {
    const int n = family_order(family);
    std::vector<PinnacleSet> out;
    if (k < 1 || k > n) return out;
    // Choose s_1 < ... < s_{k-1} from [1, n-1]; s_k = n.
    std::vector<Label> pick(static_cast<std::size_t>(k));
    pick.back() = n;
    auto rec = [&](auto&& self, int idx, Label lo) -> void {
        if (idx == k - 1) {
            PinnacleSet s(pick);
            if (is_pinnacle_set_of_family(family, s)) out.push_back(std::move(s));
            return;
        }
        for (Label l = lo; l <= n - 1 - (k - 2 - idx); ++l) {
            pick[static_cast<std::size_t>(idx)] = l;
            self(self, idx + 1, l + 1);
        }
    };
    rec(rec, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// All pinnacle sets of the family, every size.
inline std::vector<PinnacleSet> family_pinnacle_sets(const Family& family) {
    std::vector<PinnacleSet> out;
    for (int k = 1; k <= family_order(family); ++k) {
        auto part = family_pinnacle_sets(family, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Independent set of size k meeting every connected component, or nothing.
///
/// Such a set exists iff g has a pinnacle set of size k. Exact backtracking over
/// vertices in descending-degree order.
inline std::optional<VertexSet> has_size_k_pinnacle_set(const Graph& g, int k, int max_n_guard = kDefaultWitnessMaxN) {
    const int n = g.order();
    if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
    if (n > max_n_guard)
        throw PreconditionError("witness search guard exceeded: n = " + std::to_string(n) + " > " +
                                std::to_string(max_n_guard));
    const auto comp = component_ids(g);
    const int c = *std::max_element(comp.begin(), comp.end()) + 1;
    if (k < c) return std::nullopt;

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // last[c] = last position in `order` holding a vertex of component c.
    std::vector<int> last(static_cast<std::size_t>(c), -1);
    for (int pos = 0; pos < n; ++pos) last[static_cast<std::size_t>(comp[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])])] = pos;

    std::vector<int> blocked(static_cast<std::size_t>(n), 0);
    std::vector<int> hits(static_cast<std::size_t>(c), 0);
    int uncovered = c;
    std::vector<Vertex> chosen;

    auto rec = [&](auto&& self, int pos) -> bool {
        const int need = k - static_cast<int>(chosen.size());
        if (need == 0) return uncovered == 0;
        if (uncovered > need || n - pos < need) return false;
        // A component whose last candidate is behind us can never be covered.
        for (int ci = 0; ci < c; ++ci)
            if (hits[static_cast<std::size_t>(ci)] == 0 && last[static_cast<std::size_t>(ci)] < pos) return false;

        const Vertex v = order[static_cast<std::size_t>(pos)];
        if (blocked[static_cast<std::size_t>(v)] == 0) {
            chosen.push_back(v);
            for (Vertex w : g.neighbors(v)) ++blocked[static_cast<std::size_t>(w)];
            const auto cv = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
            if (hits[cv]++ == 0) --uncovered;
            if (self(self, pos + 1)) return true;
            if (--hits[cv] == 0) ++uncovered;
            for (Vertex w : g.neighbors(v)) --blocked[static_cast<std::size_t>(w)];
            chosen.pop_back();
        }
        return self(self, pos + 1);
    };
    if (!rec(rec, 0)) return std::nullopt;
    return VertexSet(chosen);
}

/// Smallest pinnacle-set size: the number of connected components.
inline int min_pinnacle_set_size(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("graph must be non-empty");
    return component_count(g);
}

}  // namespace pinnacle
