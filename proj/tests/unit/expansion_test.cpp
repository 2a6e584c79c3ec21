#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "test_support.hpp"
#include "tscm/expansion.hpp"

namespace tscm {
namespace {

WeightedAdjacency unit_weights(const AttributedNetwork& net) {
    return WeightedAdjacency::from_edge_weights(net, std::vector<double>(net.edge_count(), 1.0));
}

WeightedAdjacency weights_by_edge(const AttributedNetwork& net, const std::vector<std::pair<Edge, double>>& table) {
    std::vector<double> w(net.edge_count(), 0.0);
    for (std::size_t i = 0; i < net.edge_count(); ++i)
        for (const auto& [e, x] : table)
            if (net.edges()[i] == e) w[i] = x;
    return WeightedAdjacency::from_edge_weights(net, std::move(w));
}

TEST(SubspaceFitness, Examples) {
    const auto path = testing::uniform_network(3, 1, {{0, 1}, {1, 2}});
    const auto w = unit_weights(path);
    EXPECT_NEAR(subspace_fitness(w, {0, 1}), 2.0 / 3.0, 1e-12);
    EXPECT_EQ(subspace_fitness(w, {0, 1, 2}), 1.0);
    EXPECT_EQ(subspace_fitness(w, {1}), 0.0);
    EXPECT_THROW(subspace_fitness(w, {}), InputError);

    const auto with_isolated = testing::uniform_network(3, 1, {{0, 1}});
    EXPECT_THROW(subspace_fitness(unit_weights(with_isolated), {2}), AlgorithmError);
}

TEST(Community, CachedSumsOnPath) {
    const auto path = testing::uniform_network(3, 1, {{0, 1}, {1, 2}});
    const auto w = unit_weights(path);
    const Community c(w, {0, 1});
    EXPECT_EQ(c.internal_weight(), 2.0);
    EXPECT_EQ(c.volume(), 3.0);
    EXPECT_NEAR(c.fitness(), 2.0 / 3.0, 1e-12);
    EXPECT_TRUE(c.is_frontier(2));
    EXPECT_FALSE(c.is_frontier(0));
}

TEST(DeltaFitness, WeakLinkAdditionLowersFitness) {
    // C = {0,1}; node 2 hangs on by an epsilon edge and has a heavy edge to 3.
    const auto net = testing::uniform_network(4, 1, {{0, 1}, {1, 2}, {2, 3}});
    const double eps = 1e-6;
    const auto w = weights_by_edge(net, {{{0, 1}, 1.0}, {{1, 2}, eps}, {{2, 3}, 1.0}});
    const Community c(w, {0, 1});
    const double fit = c.fitness();
    const double d = w.weighted_degree(2);
    const double delta = delta_fitness(c, {ActionKind::add, 2});
    EXPECT_LT(delta, 0.0);
    EXPECT_NEAR(delta, -fit * d / (c.volume() + d), 1e-5);
}

TEST(DeltaFitness, RejectsInadmissibleActions) {
    const auto net = testing::uniform_network(4, 1, {{0, 1}, {2, 3}});
    const auto w = unit_weights(net);
    const Community c(w, {0});
    EXPECT_THROW(delta_fitness(c, {ActionKind::add, 2}), InputError);
    EXPECT_THROW(delta_fitness(c, {ActionKind::remove, 0}), InputError);
    EXPECT_THROW(delta_fitness(c, {ActionKind::remove, 1}), InputError);
}

TEST(DeltaFitness, MatchesRecomputationAndIsReversible) {
    std::mt19937_64 rng(21);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto net = testing::random_network(30, 0.15, 1, seed);
        std::vector<double> weights(net.edge_count());
        std::uniform_real_distribution<double> unit(0.05, 1.0);
        for (auto& x : weights) x = unit(rng);
        const auto w = WeightedAdjacency::from_edge_weights(net, weights);
        NodeId start = 0;
        while (start < net.node_count() && net.degree(start) == 0) ++start;
        if (start == net.node_count()) continue;
        Community c(w, {start});
        for (int step = 0; step < 40; ++step) {
            const NodeSet members = c.members();
            std::vector<Action> actions;
            for (NodeId v = 0; v < net.node_count(); ++v) {
                if (c.is_frontier(v)) actions.push_back({ActionKind::add, v});
                if (c.can_remove(v)) actions.push_back({ActionKind::remove, v});
            }
            if (actions.empty()) break;
            const Action a = actions[rng() % actions.size()];
            const double before = subspace_fitness(w, members);
            const double delta = delta_fitness(c, a);
            NodeSet next = members;
            if (a.kind == ActionKind::add) next = set_union(next, {a.node});
            else next.erase(std::find(next.begin(), next.end(), a.node));
            EXPECT_NEAR(delta, subspace_fitness(w, next) - before, 1e-9);

            if (a.kind == ActionKind::add) c.add(a.node);
            else c.remove(a.node);
            EXPECT_NEAR(c.fitness(), subspace_fitness(w, c.members()), 1e-9);
            const Action undo{a.kind == ActionKind::add ? ActionKind::remove : ActionKind::add, a.node};
            if (undo.kind == ActionKind::add ? c.is_frontier(a.node) : c.can_remove(a.node)) {
                EXPECT_NEAR(delta_fitness(c, undo), -delta, 1e-9);
            }
        }
    }
}

TEST(AdjustCommunity, WholeComponentIsUnchanged) {
    const auto net = testing::uniform_network(5, 1, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
    const auto w = unit_weights(net);
    AdjustTrace trace;
    const auto c = adjust_community(w, {0, 1, 2, 3, 4}, &trace);
    EXPECT_TRUE(trace.actions.empty());
    EXPECT_EQ(c.members(), (NodeSet{0, 1, 2, 3, 4}));
    EXPECT_EQ(c.fitness(), 1.0);
}

TEST(AdjustCommunity, CliqueWithPendantPassesThroughTheClique) {
    // With unit weights the whole connected graph has fitness 1 > 12/13, so
    // the climb reaches the 4-clique and then absorbs the pendant.
    const auto net = testing::uniform_network(5, 1, testing::concat(testing::clique(0, 4), {{3, 4}}));
    const auto w = unit_weights(net);
    AdjustTrace trace;
    const auto c = adjust_community(w, {0, 1}, &trace);
    ASSERT_EQ(trace.actions.size(), 3u);
    EXPECT_EQ(trace.actions[0], (Action{ActionKind::add, 2}));
    EXPECT_EQ(trace.actions[1], (Action{ActionKind::add, 3}));
    EXPECT_NEAR(trace.fitness[2], 12.0 / 13.0, 1e-12);
    EXPECT_EQ(trace.actions[2], (Action{ActionKind::add, 4}));
    EXPECT_EQ(c.members(), (NodeSet{0, 1, 2, 3, 4}));
    EXPECT_EQ(trace.actions, oracle::hill_climb(w, {0, 1}));
}

TEST(AdjustCommunity, CliqueBridgedToAnotherCliqueStopsAtTheClique) {
    const auto edges = testing::concat(testing::concat(testing::clique(0, 4), testing::clique(4, 4)), {{3, 4}});
    const auto net = testing::uniform_network(8, 1, edges);
    const auto w = unit_weights(net);
    AdjustTrace trace;
    const auto c = adjust_community(w, {0, 1}, &trace);
    EXPECT_EQ(c.members(), (NodeSet{0, 1, 2, 3}));
    EXPECT_EQ(trace.actions, oracle::hill_climb(w, {0, 1}));
    // Local optimum: no single admissible move improves.
    for (const auto& m : oracle::all_moves(w, oracle::indicator(8, c.members()))) EXPECT_LE(m.gain, 0.0);
}

TEST(AdjustCommunity, WeaklyAttachedOutlierRemovedFirst) {
    const auto net = testing::uniform_network(6, 1, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    const auto w = weights_by_edge(net, {{{0, 1}, 1.0},
                                         {{0, 2}, 1.0},
                                         {{1, 2}, 1.0},
                                         {{2, 3}, 0.01},
                                         {{3, 4}, 1.0},
                                         {{3, 5}, 1.0},
                                         {{4, 5}, 1.0}});
    AdjustTrace trace;
    const auto c = adjust_community(w, {0, 1, 2, 3}, &trace);
    ASSERT_FALSE(trace.actions.empty());
    EXPECT_EQ(trace.actions.front(), (Action{ActionKind::remove, 3}));
    const Community seed(w, {0, 1, 2, 3});
    EXPECT_GT(delta_fitness(seed, {ActionKind::remove, 3}), 0.0);
    EXPECT_EQ(c.members(), (NodeSet{0, 1, 2}));
}

TEST(AdjustCommunity, TieBreakPrefersAddThenSmallerNode) {
    EXPECT_TRUE(breaks_tie_before({ActionKind::add, 9}, {ActionKind::remove, 1}));
    EXPECT_FALSE(breaks_tie_before({ActionKind::remove, 1}, {ActionKind::add, 9}));
    EXPECT_TRUE(breaks_tie_before({ActionKind::add, 2}, {ActionKind::add, 3}));
}

TEST(AdjustCommunity, PropertiesOnSmallRandomGraphs) {
    std::mt19937_64 rng(77);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto net = testing::random_network(10, 0.35, 1, seed);
        const auto w = oracle::dyadic_weights(net, rng);
        NodeId v = static_cast<NodeId>(rng() % 10);
        if (net.degree(v) == 0) continue;
        const NodeSet start = {v, net.neighbors(v).front()};
        AdjustTrace trace;
        const auto c = adjust_community(w, make_node_set(start), &trace);
        for (std::size_t i = 1; i < trace.fitness.size(); ++i) EXPECT_GT(trace.fitness[i], trace.fitness[i - 1]);
        EXPECT_EQ(trace.actions, oracle::hill_climb(w, make_node_set(start)));
        for (const auto& m : oracle::all_moves(w, oracle::indicator(10, c.members()))) EXPECT_LE(m.gain, 0.0);
    }
}

}  // namespace
}  // namespace tscm
