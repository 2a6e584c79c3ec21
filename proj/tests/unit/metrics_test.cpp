#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tscm/metrics.hpp"

namespace tscm {
namespace {

// Straight-line recomputation from the attribute values, independent of the
// kernels.
double oracle_distance(const AttributedNetwork& net, const std::vector<double>& l, NodeId v, NodeId u) {
    double sum = 0.0;
    for (std::size_t t = 0; t < net.attribute_count(); ++t) {
        double d = 0.0;
        const auto a = net.value(v, t);
        const auto b = net.value(u, t);
        switch (net.attributes()[t].kind) {
            case AttributeKind::numerical: d = net.normalized(v, t) - net.normalized(u, t); break;
            case AttributeKind::binary:
                d = (std::get<Binary>(a).value && std::get<Binary>(b).value) ? 0.0 : 1.0;
                break;
            case AttributeKind::categorical:
                d = std::get<Categorical>(a).label == std::get<Categorical>(b).label ? 0.0 : 1.0;
                break;
        }
        sum += l[t] * d * d;
    }
    return std::sqrt(sum);
}

TEST(WeightedDistance, IdenticalVectorsAreAtZero) {
    const auto net = testing::uniform_network(2, 4, {{0, 1}});
    EXPECT_EQ(weighted_distance(net, Subspace::uniform(4), 0, 1), 0.0);
}

TEST(WeightedDistance, SingleAxis) {
    const auto net = testing::numeric_network({{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.0}}, {});
    const auto l = Subspace::from_weights({1.0, 0.0});
    EXPECT_DOUBLE_EQ(weighted_distance(net, l, 0, 1), 0.5);
}

TEST(WeightedDistance, MatchesBruteForceOracle) {
    const auto net = testing::random_network(30, 0.0, 11, 7);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> w(11);
        for (double& x : w) x = rep == 0 ? 1.0 : unit(rng);
        const auto l = Subspace::normalize(w);
        const std::vector<double> lw(l.weights().begin(), l.weights().end());
        for (NodeId v = 0; v < net.node_count(); ++v) {
            for (NodeId u = 0; u < net.node_count(); ++u) {
                const double d = oracle_distance(net, lw, v, u);
                EXPECT_NEAR(weighted_distance(net, l, v, u), d, 1e-12);
                EXPECT_NEAR(subspace_similarity_nodes(net, l, v, u), std::exp(-d), 1e-12);
            }
        }
    }
}

TEST(WeightedDistance, SymmetricAndMonotone) {
    const auto net = testing::numeric_network({{0.0, 0.0}, {0.2, 0.3}, {0.6, 0.3}, {1.0, 1.0}}, {});
    const auto l = Subspace::from_weights({0.25, 0.75});
    for (NodeId v = 0; v < 4; ++v)
        for (NodeId u = 0; u < 4; ++u) EXPECT_EQ(weighted_distance(net, l, v, u), weighted_distance(net, l, u, v));
    // Node 2 differs from node 0 more than node 1 does on attribute 0 only.
    EXPECT_GE(weighted_distance(net, l, 0, 2), weighted_distance(net, l, 0, 1));
}

TEST(WeightedDistance, ZeroWhenInSupportDiffsVanish) {
    const auto net = testing::numeric_network({{0.0, 0.3}, {1.0, 0.3}, {0.5, 0.0}, {0.5, 1.0}}, {});
    EXPECT_EQ(weighted_distance(net, Subspace::from_weights({0.0, 1.0}), 0, 1), 0.0);
}

TEST(SubspaceSimilarity, Examples) {
    const auto net = testing::numeric_network({{0.0}, {1.0}}, {});
    const auto l = Subspace::uniform(1);
    EXPECT_EQ(subspace_similarity_nodes(net, l, 0, 0), 1.0);
    EXPECT_NEAR(subspace_similarity_nodes(net, l, 0, 1), 0.36787944117144233, 1e-12);
}

TEST(SubspaceCosine, Examples) {
    const std::vector<double> a = {1.0, 0.0};
    const std::vector<double> b = {0.0, 1.0};
    const std::vector<double> c = {0.5, 0.5};
    EXPECT_EQ(subspace_cosine(a, a), 1.0);
    EXPECT_EQ(subspace_cosine(a, b), 0.0);
    EXPECT_NEAR(subspace_cosine(a, c), 0.70710678118654752, 1e-12);
}

TEST(SubspaceCosine, RangeScalingAndClamp) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> a(7);
        std::vector<double> b(7);
        for (auto& x : a) x = unit(rng);
        for (auto& x : b) x = unit(rng);
        const double s = subspace_cosine(a, b);
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, 1.0);
        auto scaled = a;
        for (auto& x : scaled) x *= 3.7;
        EXPECT_NEAR(subspace_cosine(scaled, b), s, 1e-12);
        EXPECT_LE(subspace_cosine(a, a), 1.0);
    }
}

TEST(SubspaceCosine, RejectsZeroVectorAndLengthMismatch) {
    const std::vector<double> zero = {0.0, 0.0};
    const std::vector<double> one = {1.0, 0.0};
    const std::vector<double> three = {1.0, 0.0, 0.0};
    EXPECT_THROW(subspace_cosine(zero, one), InputError);
    EXPECT_THROW(subspace_cosine(one, three), InputError);
}

TEST(Subspace, Invariants) {
    const auto l = Subspace::normalize({2.0, 1.0, 1.0});
    EXPECT_DOUBLE_EQ(l[0], 0.5);
    EXPECT_DOUBLE_EQ(l[1], 0.25);
    EXPECT_THROW(Subspace::normalize({-1.0, 2.0}), InputError);
    EXPECT_THROW(Subspace::normalize({0.0, 0.0}), InputError);
    EXPECT_THROW(Subspace::from_weights({0.5, 0.6}), InputError);
    const auto u = Subspace::uniform(4);
    for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(u[t], 0.25);
}

}  // namespace
}  // namespace tscm
