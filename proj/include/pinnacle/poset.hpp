#pragma once

#include <map>

#include "pinnacle/characterize.hpp"
#include "pinnacle/families.hpp"
#include "pinnacle/oracle.hpp"

namespace pinnacle {

/// Componentwise p_i <= q_i.
inline bool dominates(const PinnacleSet& p, const PinnacleSet& q) {
    if (p.size() != q.size()) throw PreconditionError("dominance compares sets of equal size");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > q[i]) return false;
    return true;
}

/// Componentwise max.
inline PinnacleSet join(const PinnacleSet& p, const PinnacleSet& q) {
    if (p.size() != q.size()) throw PreconditionError("join needs sets of equal size");
    if (!p.empty() && p.max() != q.max()) throw PreconditionError("join needs sets with the same maximum");
    std::vector<Label> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::max(p[i], q[i]);
    return PinnacleSet(std::move(out));
}

/// Pin(G,k) under componentwise order, with its Hasse diagram.
struct DominancePoset {
    int n = 0;
    int k = 0;
    std::vector<PinnacleSet> elements;
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)

    [[nodiscard]] std::optional<std::size_t> index_of(const PinnacleSet& s) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), s);
        if (it == elements.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - elements.begin());
    }
    [[nodiscard]] bool contains(const PinnacleSet& s) const { return index_of(s).has_value(); }
};

/// Sorts, checks the invariants and computes covers by transitive reduction.
inline DominancePoset make_poset(int n, int k, std::vector<PinnacleSet> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw PreconditionError("no pinnacle set of size " + std::to_string(k));
    for (const auto& e : elements)
        if (static_cast<int>(e.size()) != k || e.max() != n)
            throw PreconditionError(e.to_string() + " does not belong in a poset of size-" + std::to_string(k) +
                                    " sets with maximum " + std::to_string(n));
    DominancePoset P{n, k, std::move(elements), {}};
    const auto top = P.index_of(PinnacleSet::top(n, k));
    if (!top) throw PreconditionError("poset lacks its maximum " + PinnacleSet::top(n, k).to_string());

    const std::size_t m = P.elements.size();
    std::vector<std::vector<char>> lt(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            lt[a][b] = a != b && dominates(P.elements[a], P.elements[b]);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!lt[a][b]) continue;
            bool direct = true;
            for (std::size_t c = 0; c < m && direct; ++c) direct = !(lt[a][c] && lt[c][b]);
            if (direct) P.covers.emplace_back(a, b);
        }
    return P;
}

/// Where build_poset takes its elements from.
struct OracleSource {
    int max_n = kDefaultMaxN;
};
struct FamilySource {
    Family family;
};
using PosetSource = std::variant<OracleSource, FamilySource>;

inline DominancePoset build_poset(const Graph& g, int k, const PosetSource& source) {
    if (k < 1 || k > g.order()) throw PreconditionError("need 1 <= k <= n");
    std::vector<PinnacleSet> elems;
    if (const auto* o = std::get_if<OracleSource>(&source)) {
        elems = enumerate_pinnacle_sets(g, o->max_n).of_size(k);
    } else {
        const Family& f = std::get<FamilySource>(source).family;
        if (family_graph(f) != g) throw PreconditionError("graph is not " + family_name(f));
        elems = family_pinnacle_sets(f, k);
    }
    return make_poset(g.order(), k, std::move(elems));
}

namespace detail {

inline int label_sum(const PinnacleSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

/// Least element of `cands` under dominance. Any least element has the
/// smallest label sum, so only that candidate needs checking.
inline std::optional<std::size_t> least_of(const DominancePoset& P, const std::vector<std::size_t>& cands) {
    if (cands.empty()) return std::nullopt;
    std::size_t best = cands.front();
    for (std::size_t c : cands)
        if (label_sum(P.elements[c]) < label_sum(P.elements[best])) best = c;
    for (std::size_t c : cands)
        if (!dominates(P.elements[best], P.elements[c])) return std::nullopt;
    return best;
}

inline std::optional<std::size_t> greatest_of(const DominancePoset& P, const std::vector<std::size_t>& cands) {
    if (cands.empty()) return std::nullopt;
    std::size_t best = cands.front();
    for (std::size_t c : cands)
        if (label_sum(P.elements[c]) > label_sum(P.elements[best])) best = c;
    for (std::size_t c : cands)
        if (!dominates(P.elements[c], P.elements[best])) return std::nullopt;
    return best;
}

inline std::optional<std::size_t> lub_index(const DominancePoset& P, std::size_t a, std::size_t b) {
    std::vector<std::size_t> up;
    for (std::size_t c = 0; c < P.elements.size(); ++c)
        if (dominates(P.elements[a], P.elements[c]) && dominates(P.elements[b], P.elements[c])) up.push_back(c);
    return least_of(P, up);
}

inline std::optional<std::size_t> glb_index(const DominancePoset& P, std::size_t a, std::size_t b) {
    std::vector<std::size_t> down;
    for (std::size_t c = 0; c < P.elements.size(); ++c)
        if (dominates(P.elements[c], P.elements[a]) && dominates(P.elements[c], P.elements[b])) down.push_back(c);
    return greatest_of(P, down);
}

}  // namespace detail

/// Greatest lower bound of p and q among the poset's elements, if one exists.
inline std::optional<PinnacleSet> meet(const DominancePoset& P, const PinnacleSet& p, const PinnacleSet& q) {
    const auto a = P.index_of(p), b = P.index_of(q);
    if (!a || !b) throw PreconditionError("meet arguments must be poset elements");
    const auto g = detail::glb_index(P, *a, *b);
    if (!g) return std::nullopt;
    return P.elements[*g];
}

/// Minimal elements, sorted.
inline std::vector<PinnacleSet> bottom_elements(const DominancePoset& P) {
    std::vector<char> has_lower(P.elements.size(), 0);
    for (auto [lo, up] : P.covers) has_lower[up] = 1;
    std::vector<PinnacleSet> out;
    for (std::size_t i = 0; i < P.elements.size(); ++i)
        if (!has_lower[i]) out.push_back(P.elements[i]);
    return out;
}

struct LatticeReport {
    bool is_join_semilattice = false;
    bool has_minimum = false;
    bool is_lattice = false;
    bool is_distributive = false;
};

/// Exhaustive check: least upper bounds for every pair, greatest lower bounds
/// for every pair, and x ^ (y v z) = (x ^ y) v (x ^ z) for every triple.
inline LatticeReport lattice_report(const DominancePoset& P) {
    const std::size_t m = P.elements.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> jt(m, std::vector<std::size_t>(m, none)), mt = jt;
    LatticeReport r;
    r.is_join_semilattice = true;
    bool meets = true;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            if (auto j = detail::lub_index(P, a, b)) jt[a][b] = jt[b][a] = *j;
            else r.is_join_semilattice = false;
            if (auto g = detail::glb_index(P, a, b)) mt[a][b] = mt[b][a] = *g;
            else meets = false;
        }
    r.has_minimum = bottom_elements(P).size() == 1;
    r.is_lattice = r.is_join_semilattice && meets;
    if (!r.is_lattice) return r;
    r.is_distributive = true;
    for (std::size_t x = 0; x < m && r.is_distributive; ++x)
        for (std::size_t y = 0; y < m && r.is_distributive; ++y)
            for (std::size_t z = 0; z < m; ++z)
                if (mt[x][jt[y][z]] != jt[mt[x][y]][mt[x][z]]) {
                    r.is_distributive = false;
                    break;
                }
    return r;
}

/// Prefix sums of the component sizes in ascending order: the least pinnacle
/// set whose size is the number of components.
inline PinnacleSet min_by_components(const Graph& g) {
    if (g.order() < 1) throw PreconditionError("graph must be non-empty");
    std::vector<int> sizes;
    for (const auto& c : connected_components(g)) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    std::partial_sum(sizes.begin(), sizes.end(), sizes.begin());
    return PinnacleSet(sizes);
}

/// alpha_v = largest component of G - N[v]; empty where N[v] = V(G).
inline std::vector<std::optional<int>> alpha_profile(const Graph& g) {
    const int n = g.order();
    std::vector<std::optional<int>> out(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        std::vector<char> keep(static_cast<std::size_t>(n), 1);
        keep[static_cast<std::size_t>(v)] = 0;
        for (Vertex w : g.neighbors(v)) keep[static_cast<std::size_t>(w)] = 0;
        int best = 0;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (Vertex s = 0; s < n; ++s) {
            if (!keep[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
            int size = 0;
            std::vector<Vertex> stack{s};
            seen[static_cast<std::size_t>(s)] = 1;
            while (!stack.empty()) {
                const Vertex u = stack.back();
                stack.pop_back();
                ++size;
                for (Vertex w : g.neighbors(u))
                    if (keep[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            }
            best = std::max(best, size);
        }
        if (best > 0) out[static_cast<std::size_t>(v)] = best;
    }
    return out;
}

/// Least size-2 pinnacle set {n - max alpha_v, n} of a connected graph; empty for K_n.
inline std::optional<PinnacleSet> min_size2(const Graph& g) {
    if (g.order() < 2) throw PreconditionError("min_size2 needs n >= 2");
    if (!is_connected(g)) throw PreconditionError("min_size2 needs a connected graph");
    std::optional<int> best;
    for (const auto& a : alpha_profile(g))
        if (a && (!best || *a > *best)) best = a;
    if (!best) return std::nullopt;
    return PinnacleSet{g.order() - *best, g.order()};
}

/// Least element of P(C_n, k) or P(P_n, k).
inline PinnacleSet family_bottom(const Family& family, int k) {
    if (const auto* c = std::get_if<CycleFamily>(&family)) {
        const int n = c->n;
        if (n < 3 || k < 1 || n < 2 * k) throw PreconditionError("cycle bottom needs n >= 3, 1 <= k, 2k <= n");
        std::vector<Label> out;
        for (int i = 1; i < k; ++i) out.push_back(2 * i + 1);
        out.push_back(n);
        return PinnacleSet(out);
    }
    if (const auto* p = std::get_if<PathFamily>(&family)) {
        const int n = p->n;
        if (n < 2 || k < 1 || n < 2 * k - 1) throw PreconditionError("path bottom needs n >= 2, 1 <= k, 2k - 1 <= n");
        std::vector<Label> out;
        for (int i = 1; i < k; ++i) out.push_back(2 * i);
        out.push_back(n);
        return PinnacleSet(out);
    }
    throw PreconditionError("family_bottom is defined for cycles and paths only");
}

}  // namespace pinnacle
