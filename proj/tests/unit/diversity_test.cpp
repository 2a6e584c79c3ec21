#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tscm/diversity.hpp"

namespace tscm {
namespace {

NodeSet range(NodeId lo, NodeId hi) {
    NodeSet out;
    for (NodeId v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

TEST(Redundancy, Examples) {
    const ScoredCommunity a{{1, 2, 3}, 0.5};
    for (double beta : {0.0, 0.5, 1.0}) {
        EXPECT_TRUE(is_redundant(a, a, beta));
    }
    EXPECT_FALSE(is_redundant({{1, 2}, 0.3}, {{3, 4}, 0.9}, 0.5));

    const ScoredCommunity c{{0, 1, 2, 3}, 0.6};
    const ScoredCommunity c_prime{{1, 2, 3, 4}, 0.4};
    EXPECT_NEAR(jaccard(c.members, c_prime.members), 3.0 / 5.0, 1e-12);
    EXPECT_NEAR(jaccard(c.members, c_prime.members), oracle::jaccard(c.members, c_prime.members), 1e-12);
    EXPECT_TRUE(is_redundant(c_prime, c, 0.5));
    EXPECT_FALSE(is_redundant(c, c_prime, 0.5));
}

TEST(Redundancy, RejectsBetaOutsideUnitInterval) {
    EXPECT_THROW(is_redundant({{1}, 0.1}, {{1}, 0.1}, 1.5), InputError);
}

TEST(SelectDiverse, Examples) {
    EXPECT_TRUE(select_diverse({}, 0.5).empty());

    const ScoredCommunity single{{4, 5}, 0.7};
    EXPECT_EQ(select_diverse({single}, 0.5), std::vector<ScoredCommunity>{single});

    EXPECT_EQ(select_diverse({single, single}, 0.5).size(), 1u);

    const ScoredCommunity first{range(0, 8), 0.9};
    const ScoredCommunity second{range(2, 10), 0.8};
    const ScoredCommunity third{range(20, 23), 0.7};
    ASSERT_NEAR(jaccard(first.members, second.members), 0.6, 1e-12);
    EXPECT_EQ(select_diverse({third, second, first}, 0.5), (std::vector<ScoredCommunity>{first, third}));
}

TEST(SelectDiverse, SortTieBreaks) {
    const ScoredCommunity small{{1, 2}, 0.5};
    const ScoredCommunity large{{5, 6, 7}, 0.5};
    const ScoredCommunity low_min{{0, 9}, 0.5};
    EXPECT_EQ(select_diverse({small, low_min, large}, 0.5), (std::vector<ScoredCommunity>{large, low_min, small}));
}

TEST(SelectDiverse, RandomListProperties) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<ScoredCommunity> input;
        const std::size_t count = 1 + rng() % 12;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<NodeId> nodes;
            const std::size_t size = 1 + rng() % 8;
            for (std::size_t k = 0; k < size; ++k) nodes.push_back(static_cast<NodeId>(rng() % 15));
            input.push_back({make_node_set(nodes), static_cast<double>(rng() % 5) / 4.0});
        }
        const double beta = static_cast<double>(1 + rng() % 9) / 10.0;
        const auto kept = select_diverse(input, beta);
        ASSERT_FALSE(kept.empty());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            EXPECT_NE(std::find(input.begin(), input.end(), kept[i]), input.end());
            for (std::size_t j = i + 1; j < kept.size(); ++j)
                EXPECT_LT(oracle::jaccard(kept[i].members, kept[j].members), beta);
        }
        double top = 0.0;
        for (const auto& c : input) top = std::max(top, c.fitness);
        EXPECT_EQ(kept.front().fitness, top);
        EXPECT_EQ(select_diverse(kept, beta), kept);
    }
}

}  // namespace
}  // namespace tscm
