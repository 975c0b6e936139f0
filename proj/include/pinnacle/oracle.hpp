#pragma once

// Exhaustive ground truth over all n! labelings. Nothing in here depends on
// the constructive or closed-form machinery it is used to check.

#include <cstdlib>
#include <map>
#include <set>
#include <unordered_set>

#include "pinnacle/graph.hpp"

namespace pinnacle {

inline constexpr int kDefaultMaxN = 10;

/// Refusal to run an exhaustive search beyond the configured size.
class GuardExceeded : public Error {
public:
    GuardExceeded(int n, int guard)
        : Error("graph order " + std::to_string(n) + " exceeds brute-force guard " + std::to_string(guard) +
                " (raise it explicitly)"),
          n_(n),
          guard_(guard) {}
    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int guard() const { return guard_; }

private:
    int n_;
    int guard_;
};

inline void check_guard(const Graph& g, int max_n) {
    if (g.order() > max_n) throw GuardExceeded(g.order(), max_n);
    if (g.order() > 63) throw PreconditionError("exhaustive search limited to 63 vertices");
}

/// All distinct pinnacle sets of a graph, grouped by size.
struct PinnacleCatalog {
    int n = 0;
    std::map<int, std::vector<PinnacleSet>> by_size;
    std::size_t total = 0;

    [[nodiscard]] bool contains(const PinnacleSet& s) const {
        auto it = by_size.find(static_cast<int>(s.size()));
        return it != by_size.end() && std::binary_search(it->second.begin(), it->second.end(), s);
    }
    [[nodiscard]] const std::vector<PinnacleSet>& of_size(int k) const {
        static const std::vector<PinnacleSet> none;
        auto it = by_size.find(k);
        return it == by_size.end() ? none : it->second;
    }
    [[nodiscard]] std::vector<PinnacleSet> all() const {
        std::vector<PinnacleSet> out;
        for (const auto& [k, sets] : by_size) out.insert(out.end(), sets.begin(), sets.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

inline std::uint64_t pinnacle_mask(const std::vector<Edge>& edges, const std::vector<Label>& perm, int n) {
    std::uint64_t m = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (const Edge& e : edges) {
        const Label a = perm[static_cast<std::size_t>(e.u)], b = perm[static_cast<std::size_t>(e.v)];
        m &= ~(std::uint64_t{1} << ((a < b ? a : b) - 1));
    }
    return m;
}

/// Calls f(perm, mask) for every labeling in lexicographic order.
template <class F>
void for_each_labeling(const Graph& g, F&& f) {
    const int n = g.order();
    std::vector<Label> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    const auto& edges = g.edges();
    do {
        f(perm, pinnacle_mask(edges, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

/// Pin(G) by exhaustion over every labeling.
inline PinnacleCatalog enumerate_pinnacle_sets(const Graph& g, int max_n_guard = kDefaultMaxN) {
    check_guard(g, max_n_guard);
    if (g.order() == 0) throw PreconditionError("enumeration needs a non-empty graph");
    std::set<std::uint64_t> seen;
    detail::for_each_labeling(g, [&](const std::vector<Label>&, std::uint64_t m) { seen.insert(m); });
    PinnacleCatalog cat;
    cat.n = g.order();
    for (std::uint64_t m : seen) {
        PinnacleSet s = PinnacleSet::from_mask(m);
        cat.by_size[static_cast<int>(s.size())].push_back(std::move(s));
    }
    for (auto& [k, sets] : cat.by_size) std::sort(sets.begin(), sets.end());
    cat.total = seen.size();
    return cat;
}

/// Number of labelings whose pinnacle set is exactly s.
inline std::uint64_t count_labelings_with_pinnacle_set(const Graph& g, const PinnacleSet& s,
                                                       int max_n_guard = kDefaultMaxN) {
    check_guard(g, max_n_guard);
    if (g.order() == 0) throw PreconditionError("counting needs a non-empty graph");
    if (!s.empty() && s.max() > g.order()) return 0;
    const std::uint64_t target = s.mask();
    std::uint64_t count = 0;
    detail::for_each_labeling(g, [&](const std::vector<Label>&, std::uint64_t m) { count += (m == target); });
    return count;
}

/// Histogram of pinnacle sets over all labelings (mask -> count).
inline std::map<PinnacleSet, std::uint64_t> labeling_histogram(const Graph& g, int max_n_guard = kDefaultMaxN) {
    check_guard(g, max_n_guard);
    if (g.order() == 0) throw PreconditionError("counting needs a non-empty graph");
    std::map<std::uint64_t, std::uint64_t> raw;
    detail::for_each_labeling(g, [&](const std::vector<Label>&, std::uint64_t m) { ++raw[m]; });
    std::map<PinnacleSet, std::uint64_t> out;
    for (auto [m, c] : raw) out.emplace(PinnacleSet::from_mask(m), c);
    return out;
}

/// Some labeling realizing s, by backtracking labels n down to 1.
///
/// When label L is placed every labeled vertex carries a larger label, so the
/// new vertex is a pinnacle exactly when none of its neighbors is labeled yet.
/// Failed sets of labeled vertices are memoized.
inline std::optional<Labeling> find_labeling(const Graph& g, const PinnacleSet& s, int max_n_guard = kDefaultMaxN) {
    check_guard(g, max_n_guard);
    const int n = g.order();
    if (n == 0) throw PreconditionError("find_labeling needs a non-empty graph");
    if (s.empty() || s.max() != n) return std::nullopt;

    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    std::vector<char> in_set(static_cast<std::size_t>(n + 1), 0);
    for (Label l : s) in_set[static_cast<std::size_t>(l)] = 1;

    std::unordered_set<std::uint64_t> dead;
    std::vector<Label> labels(static_cast<std::size_t>(n), 0);

    auto solve = [&](auto&& self, std::uint64_t placed, Label next) -> bool {
        if (next == 0) return true;
        if (dead.count(placed)) return false;
        const bool want_pinnacle = in_set[static_cast<std::size_t>(next)] != 0;
        for (Vertex v = 0; v < n; ++v) {
            if (placed >> v & 1U) continue;
            const bool touches = (nbr[static_cast<std::size_t>(v)] & placed) != 0;
            if (touches == want_pinnacle) continue;
            labels[static_cast<std::size_t>(v)] = next;
            if (self(self, placed | (std::uint64_t{1} << v), next - 1)) return true;
        }
        dead.insert(placed);
        return false;
    };
    if (!solve(solve, 0, n)) return std::nullopt;
    return Labeling(labels);
}

}  // namespace pinnacle
