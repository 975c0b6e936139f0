#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "naive.hpp"
#include "pinnacle/pinnacle.hpp"

using namespace pinnacle;

TEST(Gadget, UniversalVertex) {
    EXPECT_EQ(add_universal_vertex(empty_graph(2)), complete_bipartite_graph(2, 1));
    EXPECT_EQ(add_universal_vertex(complete_graph(3)), complete_graph(4));
    const Graph h = add_universal_vertex(fixtures::two_edges());
    EXPECT_EQ(h.order(), 5);
    EXPECT_TRUE(is_connected(h));
    EXPECT_EQ(h.degree(4), 4);
}

TEST(Gadget, LargeIndependentSetsAvoidTheNewVertex) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = naive::random_graph(n, 0.3, rng);
        const Graph h = add_universal_vertex(g);
        EXPECT_EQ(naive::independence_number(h), naive::independence_number(g));
    }
}

TEST(ReduceSize, Examples) {
    auto r = reduce_to_pinnacle_size(DecisionInstance::independent_set(complete_graph(3), 2));
    EXPECT_EQ(r.kind, DecisionKind::pinnacle_size);
    EXPECT_EQ(r.graph, complete_graph(3));
    EXPECT_EQ(r.k, 2);
    EXPECT_EQ(enumerate_pinnacle_sets(r.graph).of_size(2).size(), 0u);

    r = reduce_to_pinnacle_size(DecisionInstance::independent_set(cycle_graph(5), 2));
    EXPECT_EQ(r.graph, cycle_graph(5));
    EXPECT_EQ(enumerate_pinnacle_sets(r.graph).of_size(2).size(), 2u);

    r = reduce_to_pinnacle_size(DecisionInstance::independent_set(fixtures::two_edges(), 2));
    EXPECT_EQ(r.graph.order(), 5);
    EXPECT_FALSE(enumerate_pinnacle_sets(r.graph).of_size(2).empty());

    r = reduce_to_pinnacle_size(DecisionInstance::independent_set(fixtures::two_edges(), 1));
    EXPECT_EQ(r.graph, fixtures::two_edges());

    EXPECT_THROW(reduce_to_pinnacle_size(DecisionInstance::independent_set(Graph(0), 1)), PreconditionError);
    EXPECT_THROW(reduce_to_pinnacle_size(DecisionInstance::pinnacle_size(path_graph(2), 1)), PreconditionError);
}

TEST(ReduceExistence, Examples) {
    auto r = reduce_to_pinnacle_existence(DecisionInstance::independent_set(cycle_graph(5), 2));
    EXPECT_EQ(r.target_set, (PinnacleSet{4, 5}));
    EXPECT_TRUE(enumerate_pinnacle_sets(r.graph).contains(*r.target_set));

    r = reduce_to_pinnacle_existence(DecisionInstance::independent_set(complete_graph(4), 2));
    EXPECT_EQ(r.target_set, (PinnacleSet{3, 4}));
    EXPECT_FALSE(enumerate_pinnacle_sets(r.graph).contains(*r.target_set));

    r = reduce_to_pinnacle_existence(DecisionInstance::independent_set(path_graph(4), 2));
    EXPECT_TRUE(enumerate_pinnacle_sets(r.graph).contains(*r.target_set));

    r = reduce_to_pinnacle_existence(DecisionInstance::independent_set(fixtures::two_edges(), 2));
    EXPECT_EQ(r.graph.order(), 5);
    EXPECT_EQ(r.target_set, (PinnacleSet{4, 5}));
    EXPECT_THROW(reduce_to_pinnacle_existence(DecisionInstance::independent_set(path_graph(3), 4)), PreconditionError);
}

TEST(Verify, SizeCertificates) {
    EXPECT_TRUE(verify_size_certificate(petersen_graph(), 3, fixtures::petersen_seeds()));
    EXPECT_TRUE(verify_size_certificate(petersen_graph(), 2, fixtures::petersen_seeds()));
    EXPECT_FALSE(verify_size_certificate(petersen_graph(), 4, fixtures::petersen_seeds()));
    EXPECT_FALSE(verify_size_certificate(complete_graph(4), 2, VertexSet{0, 1}));
    EXPECT_FALSE(verify_size_certificate(fixtures::two_edges(), 1, VertexSet{0}));
    EXPECT_THROW(verify_size_certificate(path_graph(3), 1, VertexSet{3}), PreconditionError);
}

TEST(Verify, ExistenceCertificates) {
    const Graph g = fixtures::small_five();
    EXPECT_TRUE(verify_existence_certificate(g, {4, 5}, fixtures::small_five_lambda1()));
    EXPECT_FALSE(verify_existence_certificate(g, {5}, fixtures::small_five_lambda1()));
    EXPECT_TRUE(verify_existence_certificate(petersen_graph(), {4, 7, 10}, fixtures::petersen_477()));
    EXPECT_THROW(verify_existence_certificate(g, {5}, Labeling{1, 2}), PreconditionError);
}

TEST(Reduction, SoundOnRandomGraphs) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = naive::random_graph(n, 0.4, rng);
        for (int k = 1; k <= n; ++k) {
            const bool is = naive::independence_number(g) >= k;
            const auto size = reduce_to_pinnacle_size(DecisionInstance::independent_set(g, k));
            bool size_yes = false;
            for (const auto& [s, c] : naive::histogram(size.graph)) size_yes = size_yes || static_cast<int>(s.size()) >= k;
            const auto ex = reduce_to_pinnacle_existence(DecisionInstance::independent_set(g, k));
            EXPECT_EQ(size_yes, is);
            EXPECT_EQ(naive::pin(ex.graph).count(ex.target_set->labels()) == 1, is);
        }
    }
}
