#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "naive.hpp"
#include "pinnacle/pinnacle.hpp"

using namespace pinnacle;

TEST(SwapUp, PetersenSteps) {
    const Graph g = petersen_graph();
    const auto a = swap_up(g, fixtures::petersen_477(), 7);
    EXPECT_EQ(a.pinnacles, (PinnacleSet{4, 8, 10}));
    EXPECT_EQ(a.labeling, fixtures::petersen_4810());
    EXPECT_EQ(swap_up(g, a.labeling, 8).pinnacles, (PinnacleSet{4, 9, 10}));
}

TEST(SwapUp, Preconditions) {
    EXPECT_THROW(swap_up(path_graph(2), Labeling{1, 2}, 2), PreconditionError);
    EXPECT_THROW(swap_up(path_graph(2), Labeling{1, 2}, 1), PreconditionError);
    // 4 and 5 are both pinnacles
    EXPECT_THROW(swap_up(fixtures::small_five(), fixtures::small_five_lambda1(), 4), PreconditionError);
}

TEST(SwapUp, ExactOnEveryLabelingOfSmallGraphs) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Graph g = naive::random_graph(n, 0.5, rng);
        std::vector<int> lab(n);
        std::iota(lab.begin(), lab.end(), 1);
        do {
            const Labeling lam(lab);
            const auto before = naive::pinnacles(g, lab);
            for (Label p : before) {
                if (p == n || std::binary_search(before.begin(), before.end(), p + 1)) continue;
                auto expect = before;
                *std::find(expect.begin(), expect.end(), p) = p + 1;
                std::sort(expect.begin(), expect.end());
                const auto r = swap_up(g, lam, p);
                EXPECT_EQ(naive::pinnacles(g, r.labeling.labels()), expect);
            }
        } while (std::next_permutation(lab.begin(), lab.end()));
    }
}

TEST(SwapDown, AdjacentVerticesGiveNothing) {
    const auto r = swap_down(fixtures::small_five(), fixtures::small_five_lambda1(), 4);
    EXPECT_FALSE(r.has_value());
}

TEST(SwapDown, CycleExample) {
    const Graph c6 = cycle_graph(6);
    const Labeling lam = cycle_labeling(6, {4, 6});
    ASSERT_FALSE(c6.adjacent(lam.vertex_of(4), lam.vertex_of(3)));
    const auto r = swap_down(c6, lam, 4);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->pinnacles, (PinnacleSet{3, 6}));
    EXPECT_EQ(pinnacles(c6, r->labeling), (PinnacleSet{3, 6}));
}

TEST(SwapDown, Preconditions) {
    EXPECT_THROW(swap_down(path_graph(3), Labeling{2, 1, 3}, 2), PreconditionError);  // 1 is below the floor
    const Graph c6 = cycle_graph(6);
    const Labeling lam = cycle_labeling(6, {3, 6});
    EXPECT_FALSE(swap_down(c6, lam, 3).has_value());  // labels 2 and 3 sit on adjacent vertices
    EXPECT_THROW(swap_down(c6, lam, 5), PreconditionError);  // not a pinnacle
    EXPECT_THROW(swap_down(fixtures::small_five(), fixtures::small_five_lambda1(), 5), PreconditionError);
}

TEST(Dominance, PetersenStaircase) {
    const auto path = dominance_path(petersen_graph(), fixtures::petersen_477(), {7, 9, 10});
    const std::vector<PinnacleSet> expect{{4, 8, 10}, {4, 9, 10}, {5, 9, 10}, {6, 9, 10}, {7, 9, 10}};
    EXPECT_EQ(path.steps, expect);
    EXPECT_EQ(pinnacles(petersen_graph(), path.labeling), (PinnacleSet{7, 9, 10}));
}

TEST(Dominance, IdentityAndCycle) {
    const Labeling lam = fixtures::petersen_477();
    const auto same = dominance_path(petersen_graph(), lam, {4, 7, 10});
    EXPECT_TRUE(same.steps.empty());
    EXPECT_EQ(same.labeling, lam);

    const Graph c8 = cycle_graph(8);
    const auto p = dominance_path(c8, cycle_labeling(8, {3, 5, 8}), {4, 6, 8});
    EXPECT_EQ(pinnacles(c8, p.labeling), (PinnacleSet{4, 6, 8}));
    EXPECT_EQ(p.steps.size(), 2u);
}

TEST(Dominance, Preconditions) {
    const Labeling lam = fixtures::petersen_477();
    EXPECT_THROW(dominance_transform(petersen_graph(), lam, {3, 9, 10}), PreconditionError);
    EXPECT_THROW(dominance_transform(petersen_graph(), lam, {9, 10}), PreconditionError);
    EXPECT_THROW(dominance_transform(petersen_graph(), lam, {5, 8, 9}), PreconditionError);
}

TEST(Dominance, IntermediateSetsAreRealizable) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = naive::random_graph(n, 0.4, rng);
        const auto ref = naive::pin(g);
        const Labeling lam(naive::random_labels(n, rng));
        const PinnacleSet p = pinnacles(g, lam);
        const auto path = dominance_path(g, lam, PinnacleSet::top(n, static_cast<int>(p.size())));
        int expected_swaps = 0;
        for (std::size_t i = 0; i < p.size(); ++i) expected_swaps += (n - static_cast<int>(p.size()) + 1 + static_cast<int>(i)) - p[i];
        EXPECT_EQ(static_cast<int>(path.steps.size()), expected_swaps);
        for (const auto& s : path.steps) EXPECT_TRUE(ref.count(s.labels())) << s;
    }
}

TEST(Otp, BarbellTreeSizes) {
    const auto t = otp_from_labeling(fixtures::barbell8(), fixtures::barbell8_labeling());
    EXPECT_EQ(t.tree_sizes(), (std::vector<int>{3, 2, 3}));
    EXPECT_EQ(t.prefix_sums(), (std::vector<int>{3, 5, 8}));
    std::vector<Label> root_labels;
    for (Vertex r : t.roots) root_labels.push_back(fixtures::barbell8_labeling()[r]);
    EXPECT_EQ(root_labels, (std::vector<Label>{3, 6, 8}));
    EXPECT_TRUE(validate_otp(fixtures::barbell8(), t));
}

TEST(Otp, SingleSeedBasicLabelingGivesOneTree) {
    const Graph g = petersen_graph();
    const auto t = otp_from_labeling(g, basic_labeling(g, VertexSet{4}));
    ASSERT_EQ(t.roots.size(), 1u);
    EXPECT_EQ(t.roots[0], 4);
    EXPECT_EQ(t.tree_sizes(), (std::vector<int>{10}));
}

TEST(Otp, PetersenPrefixBound) {
    const auto t = otp_from_labeling(petersen_graph(), fixtures::petersen_477());
    const auto p = t.prefix_sums();
    ASSERT_EQ(p.size(), 3u);
    EXPECT_LE(p[0], 4);
    EXPECT_LE(p[1], 7);
    EXPECT_EQ(p[2], 10);
}

TEST(Otp, ValidationCatchesViolations) {
    // adjacent roots
    OrderedTreePartition a{{0, 1}, {-1, -1, 1}};
    EXPECT_FALSE(validate_otp(path_graph(3), a));
    // 4-vertex path 0-1-2-3 with roots 0 and 3: vertex 1 touches root 0 but hangs off 2
    OrderedTreePartition b{{0, 3}, {-1, 2, 3, -1}};
    const auto check = validate_otp(path_graph(4), b);
    EXPECT_FALSE(check);
    ASSERT_EQ(check.reasons.size(), 1u);
    EXPECT_NE(check.reasons[0].find("must hang off root 0"), std::string::npos);
    // parent edge missing from the graph
    OrderedTreePartition c{{0}, {-1, 0, 0}};
    EXPECT_FALSE(validate_otp(path_graph(3), c));
    // cycle in parent pointers
    OrderedTreePartition d{{0}, {-1, 2, 3, 1}};
    EXPECT_FALSE(validate_otp(complete_graph(4), d));
    EXPECT_THROW(labeling_from_otp(path_graph(3), a), PreconditionError);
}

TEST(Otp, TwoTreesRelabel) {
    const Graph g = fixtures::two_trees();
    const auto t = otp_from_labeling(g, fixtures::two_trees_labeling());
    EXPECT_EQ(t.tree_sizes(), (std::vector<int>{5, 3}));
    EXPECT_EQ(pinnacles(g, labeling_from_otp(g, t)), (PinnacleSet{5, 8}));
}

TEST(Otp, SingleSpanningTree) {
    const Graph g = cycle_graph(5);
    OrderedTreePartition t{{2}, {1, 2, -1, 2, 3}};
    ASSERT_TRUE(validate_otp(g, t));
    EXPECT_EQ(pinnacles(g, labeling_from_otp(g, t)), (PinnacleSet{5}));
}

TEST(Otp, NoValidPartitionForUnrealizableSizes) {
    // roots a, e, f with trees of sizes 2, 2, 2 would give {2,4,6}; no parent
    // table with those roots passes validation with those sizes.
    const Graph g = fixtures::two_bottoms();
    const std::vector<Vertex> roots{0, 4, 5};
    int valid = 0;
    std::vector<Vertex> parent(6, -1);
    std::function<void(int)> rec = [&](int v) {
        if (v == 6) {
            OrderedTreePartition t{roots, parent};
            if (validate_otp(g, t) && t.tree_sizes() == std::vector<int>{2, 2, 2}) ++valid;
            return;
        }
        if (std::find(roots.begin(), roots.end(), v) != roots.end()) return rec(v + 1);
        for (Vertex w : g.neighbors(v)) {
            parent[v] = w;
            rec(v + 1);
        }
        parent[v] = -1;
    };
    rec(0);
    EXPECT_EQ(valid, 0);
}

TEST(Otp, PrefixSumsAreAFixedPoint) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = naive::random_graph(n, 0.4, rng);
        const Labeling lam(naive::random_labels(n, rng));
        const auto t = otp_from_labeling(g, lam);
        ASSERT_TRUE(validate_otp(g, t));
        const auto p = t.prefix_sums();
        const auto q = pinnacles(g, lam);
        for (std::size_t i = 0; i < p.size(); ++i) EXPECT_LE(p[i], q[i]);
        const Labeling re = labeling_from_otp(g, t);
        EXPECT_EQ(pinnacles(g, re).labels(), p);
        EXPECT_EQ(otp_from_labeling(g, re).prefix_sums(), p);
    }
}

TEST(DropMin, TwoTreesRerootsAtV4) {
    const auto tr = drop_min_pinnacle_trace(fixtures::two_trees(), fixtures::two_trees_labeling());
    EXPECT_EQ(tr.new_root, 4);
    EXPECT_EQ(pinnacles(fixtures::two_trees(), tr.labeling), (PinnacleSet{8}));
}

TEST(DropMin, PetersenAndCycle) {
    const Graph g = petersen_graph();
    const Labeling out = drop_min_pinnacle(g, fixtures::petersen_477());
    EXPECT_EQ(pinnacles(g, out), (PinnacleSet{7, 10}));
    EXPECT_TRUE(find_labeling(g, {7, 10}).has_value());

    const Graph c6 = cycle_graph(6);
    EXPECT_EQ(pinnacles(c6, drop_min_pinnacle(c6, cycle_labeling(6, {3, 6}))), (PinnacleSet{6}));
}

TEST(DropMin, Preconditions) {
    EXPECT_THROW(drop_min_pinnacle(fixtures::two_edges(), Labeling{1, 2, 3, 4}), PreconditionError);
    EXPECT_THROW(drop_min_pinnacle(path_graph(3), Labeling{1, 3, 2}), PreconditionError);
}
