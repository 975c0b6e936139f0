#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pinnacle/poset.hpp"

namespace pinnacle {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b), zero when b < 0 or b > a.
inline BigInt binomial(int a, int b) {
    if (a < 0) throw PreconditionError("binomial needs a >= 0");
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

inline BigInt factorial(int n) {
    if (n < 0) throw PreconditionError("factorial needs n >= 0");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// (a_1 + ... + a_t)! / (a_1! ... a_t!)
inline BigInt multinomial(std::span<const int> parts) {
    BigInt r = 1;
    int total = 0;
    for (int a : parts) {
        total += a;
        r *= binomial(total, a);
    }
    return r;
}

struct Composition {
    std::vector<int> parts;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Compositions of s into t positive parts, lexicographic.
inline std::vector<Composition> compositions(int s, int t) {
    if (s < 0 || t < 0) throw PreconditionError("compositions need s, t >= 0");
    std::vector<Composition> out;
    if (t > s || (t == 0 && s > 0)) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int slots) -> void {
        if (slots == 0) {
            if (left == 0) out.push_back({cur});
            return;
        }
        for (int a = 1; a <= left - (slots - 1); ++a) {
            cur.push_back(a);
            self(self, left - a, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, s, t);
    return out;
}

/// Number of size-k sets dominating b with the same maximum: tuples
/// i_1 < ... < i_{k-1} < b_k with i_j >= b_j.
inline BigInt count_from_bottom(const PinnacleSet& b) {
    if (b.empty()) throw PreconditionError("bottom set must be non-empty");
    const std::size_t k = b.size();
    if (k == 1) return 1;
    const int top = b.max();
    // ways[v] = tuples ending with i_j = v
    std::vector<BigInt> ways(static_cast<std::size_t>(top), 0);
    for (int v = b[0]; v < top; ++v) ways[static_cast<std::size_t>(v)] = 1;
    for (std::size_t j = 1; j + 1 < k; ++j) {
        std::vector<BigInt> next(static_cast<std::size_t>(top), 0);
        BigInt run = 0;
        for (int v = 1; v < top; ++v) {
            if (v >= b[j]) next[static_cast<std::size_t>(v)] = run;
            run += ways[static_cast<std::size_t>(v)];
        }
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

/// Size of P(G,k) from its poset; defined only when the bottom is unique.
inline BigInt count_poset(const DominancePoset& P) {
    const auto bottoms = bottom_elements(P);
    if (bottoms.size() != 1)
        throw PreconditionError("no counting formula with " + std::to_string(bottoms.size()) +
                                " bottom sets; use the oracle");
    return count_from_bottom(bottoms.front());
}

enum class CountFamily { cycle, path };

/// pinn(C_n, k), pinn(P_n, k), or the totals when k is absent.
inline BigInt pinn_closed_form(CountFamily family, int n, std::optional<int> k = std::nullopt) {
    if (family == CountFamily::cycle) {
        if (n < 3) throw PreconditionError("cycle count needs n >= 3");
        if (!k) return binomial(n - 2, n / 2 - 1);
        if (*k < 1) throw PreconditionError("k must be >= 1");
        if (*k > n / 2) return 0;
        return binomial(n - 2, *k - 1) - binomial(n - 2, *k - 2);
    }
    if (n < 2) throw PreconditionError("path count needs n >= 2");
    if (!k) return binomial(n - 1, (n + 1) / 2 - 1);
    if (*k < 1) throw PreconditionError("k must be >= 1");
    if (*k > (n + 1) / 2) return 0;
    return binomial(n - 1, *k - 1) - binomial(n - 1, *k - 2);
}

inline BigInt pinn_complete_bipartite(int m, int n) {
    if (n < 1 || m < n) throw PreconditionError("need m >= n >= 1");
    return m;
}

/// Labelings of C_n with pinnacle set {n-k+1, ..., n}:
/// (k-1)! * n * 2^(n-2k) * sum over compositions a of n-k into k parts of multinomial(a).
inline BigInt count_labelings_cycle_max_set(int n, int k) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    if (k < 1 || k > n / 2) throw PreconditionError("k must lie in [1, floor(n/2)]");
    BigInt sum = 0;
    for (const auto& c : compositions(n - k, k)) sum += multinomial(c.parts);
    return factorial(k - 1) * n * (BigInt(1) << (n - 2 * k)) * sum;
}

/// Rows n = first..last of pinn(family, n, k), k = 1..max size.
struct CountTable {
    CountFamily family;
    int first = 0;
    std::vector<std::vector<BigInt>> rows;
};

inline CountTable count_table(CountFamily family, int last) {
    CountTable t{family, family == CountFamily::cycle ? 3 : 2, {}};
    for (int n = t.first; n <= last; ++n) {
        const int kmax = family == CountFamily::cycle ? n / 2 : (n + 1) / 2;
        std::vector<BigInt> row;
        for (int k = 1; k <= kmax; ++k) row.push_back(pinn_closed_form(family, n, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace pinnacle
