#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "naive.hpp"
#include "pinnacle/pinnacle.hpp"

using namespace pinnacle;

namespace {

std::set<naive::Set> family_sets(const Family& f) {
    std::set<naive::Set> out;
    for (const auto& s : family_pinnacle_sets(f)) out.insert(s.labels());
    return out;
}

}  // namespace

TEST(Ell, CountsMissingLabelsBelow) {
    EXPECT_EQ(ell({3, 5, 8}).values, (std::vector<int>{2, 3, 5}));
    EXPECT_EQ(ell({1, 2}).values, (std::vector<int>{0, 0}));
}

TEST(Membership, Cycles) {
    EXPECT_TRUE(is_pinnacle_set_of_family(CycleFamily{8}, {3, 5, 8}));
    EXPECT_FALSE(is_pinnacle_set_of_family(CycleFamily{8}, {2, 5, 8}));
    EXPECT_FALSE(is_pinnacle_set_of_family(CycleFamily{8}, {3, 5, 7}));
    EXPECT_FALSE(is_pinnacle_set_of_family(CycleFamily{6}, {3, 4, 6}));
    EXPECT_THROW(is_pinnacle_set_of_family(CycleFamily{2}, {2}), PreconditionError);
}

TEST(Membership, PathsCompleteBipartite) {
    EXPECT_TRUE(is_pinnacle_set_of_family(PathFamily{9}, {2, 4, 6, 9}));
    EXPECT_FALSE(is_pinnacle_set_of_family(PathFamily{9}, {1, 9}));
    EXPECT_TRUE(is_pinnacle_set_of_family(PathFamily{1}, {1}));
    EXPECT_TRUE(is_pinnacle_set_of_family(CompleteFamily{4}, {4}));
    EXPECT_FALSE(is_pinnacle_set_of_family(CompleteFamily{4}, {3, 4}));
    EXPECT_TRUE(is_pinnacle_set_of_family(CompleteBipartiteFamily{3, 2}, {3, 4, 5}));
    EXPECT_FALSE(is_pinnacle_set_of_family(CompleteBipartiteFamily{3, 2}, {2, 3, 4, 5}));
    EXPECT_FALSE(is_pinnacle_set_of_family(CompleteBipartiteFamily{3, 2}, {3, 5}));
    EXPECT_THROW(is_pinnacle_set_of_family(CompleteBipartiteFamily{2, 3}, {5}), PreconditionError);
}

TEST(Membership, FamiliesMatchNaiveOracle) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(family_sets(PathFamily{n}), naive::pin(path_graph(n))) << "path " << n;
        EXPECT_EQ(family_sets(CompleteFamily{n}), naive::pin(complete_graph(n)));
        if (n >= 3) {
            EXPECT_EQ(family_sets(CycleFamily{n}), naive::pin(cycle_graph(n))) << "cycle " << n;
        }
    }
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m && m + n <= 8; ++n)
            EXPECT_EQ(family_sets(CompleteBipartiteFamily{m, n}), naive::pin(complete_bipartite_graph(m, n)));
}

TEST(SizeK, WitnessesAgreeWithNaiveSearch) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = naive::random_graph(n, 0.35, rng);
        for (int k = 1; k <= n; ++k) {
            bool expect = false;
            for (unsigned m = 0; m < (1U << n) && !expect; ++m)
                expect = __builtin_popcount(m) == k && naive::independent_reaching(g, m);
            const auto w = has_size_k_pinnacle_set(g, k);
            EXPECT_EQ(w.has_value(), expect);
            if (w) {
                EXPECT_EQ(static_cast<int>(w->size()), k);
                EXPECT_TRUE(is_independent(g, *w));
                EXPECT_TRUE(reaches_all(g, *w));
            }
        }
    }
}

TEST(SizeK, GuardAndMinimum) {
    EXPECT_THROW(has_size_k_pinnacle_set(path_graph(30), 2), PreconditionError);
    EXPECT_TRUE(has_size_k_pinnacle_set(path_graph(30), 15, 30).has_value());
    EXPECT_EQ(min_pinnacle_set_size(fixtures::forest_1124()), 4);
    EXPECT_EQ(min_pinnacle_set_size(petersen_graph()), 1);
}
