#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "tscm/kernels.hpp"

namespace tscm::kernels {
namespace {

struct Case {
    std::vector<AttributeKind> kinds;
    std::vector<double> a, b, w;
};

Case random_case(std::size_t r, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Case c;
    for (std::size_t t = 0; t < r; ++t) {
        const auto kind = static_cast<AttributeKind>(rng() % 3);
        c.kinds.push_back(kind);
        switch (kind) {
            case AttributeKind::numerical:
                c.a.push_back(unit(rng));
                c.b.push_back(unit(rng));
                break;
            case AttributeKind::binary:
                c.a.push_back(static_cast<double>(rng() & 1));
                c.b.push_back(static_cast<double>(rng() & 1));
                break;
            case AttributeKind::categorical:
                c.a.push_back(static_cast<double>(rng() % 4));
                c.b.push_back(static_cast<double>(rng() % 4));
                break;
        }
        c.w.push_back(unit(rng));
    }
    return c;
}

double reference_distance(const Case& c) {
    double sum = 0.0;
    for (std::size_t t = 0; t < c.kinds.size(); ++t) {
        double d = 0.0;
        if (c.kinds[t] == AttributeKind::numerical) d = c.a[t] - c.b[t];
        else if (c.kinds[t] == AttributeKind::binary) d = (c.a[t] == 1.0 && c.b[t] == 1.0) ? 0.0 : 1.0;
        else d = c.a[t] == c.b[t] ? 0.0 : 1.0;
        sum += c.w[t] * d * d;
    }
    return sum;
}

TEST(AttributeDifference, FollowsKindRules) {
    EXPECT_DOUBLE_EQ(attribute_difference(AttributeKind::numerical, 0.8, 0.3), 0.5);
    EXPECT_EQ(attribute_difference(AttributeKind::binary, 1.0, 1.0), 0.0);
    EXPECT_EQ(attribute_difference(AttributeKind::binary, 0.0, 0.0), 1.0);
    EXPECT_EQ(attribute_difference(AttributeKind::binary, 1.0, 0.0), 1.0);
    EXPECT_EQ(attribute_difference(AttributeKind::categorical, 2.0, 2.0), 0.0);
    EXPECT_EQ(attribute_difference(AttributeKind::categorical, 2.0, 3.0), 1.0);
}

TEST(ScalarKernel, MatchesReference) {
    std::mt19937_64 rng(11);
    const KernelTable& scalar = scalar_table();
    for (std::size_t r = 0; r < 40; ++r) {
        const Case c = random_case(r, rng);
        const DiffLayout layout(c.kinds);
        EXPECT_NEAR(scalar.weighted_sq_distance(c.a.data(), c.b.data(), c.w.data(), layout),
                    reference_distance(c), 1e-12);
    }
}

class Avx2Equivalence : public ::testing::Test {
  protected:
    void SetUp() override {
        if (avx2_table() == nullptr) GTEST_SKIP() << "AVX2 not available";
    }
};

TEST_F(Avx2Equivalence, WeightedDistanceAgreesWithScalar) {
    std::mt19937_64 rng(5);
    const KernelTable& scalar = scalar_table();
    const KernelTable& simd = *avx2_table();
    for (int rep = 0; rep < 200; ++rep) {
        const Case c = random_case(rng() % 70, rng);
        const DiffLayout layout(c.kinds);
        const double s = scalar.weighted_sq_distance(c.a.data(), c.b.data(), c.w.data(), layout);
        const double v = simd.weighted_sq_distance(c.a.data(), c.b.data(), c.w.data(), layout);
        EXPECT_NEAR(v, s, 1e-12 * std::max(1.0, s));
    }
}

TEST_F(Avx2Equivalence, AccumulateIsBitIdentical) {
    std::mt19937_64 rng(9);
    const KernelTable& scalar = scalar_table();
    const KernelTable& simd = *avx2_table();
    for (int rep = 0; rep < 200; ++rep) {
        const Case c = random_case(rng() % 70, rng);
        const DiffLayout layout(c.kinds);
        std::vector<double> acc_s(c.kinds.size(), 0.25);
        std::vector<double> acc_v(c.kinds.size(), 0.25);
        scalar.accumulate_sq_diff(c.a.data(), c.b.data(), layout, acc_s.data());
        simd.accumulate_sq_diff(c.a.data(), c.b.data(), layout, acc_v.data());
        EXPECT_EQ(acc_s, acc_v);
    }
}

TEST(KernelSelection, SelectFallsBackAndRestores) {
    const Isa before = active().isa;
    EXPECT_EQ(select(Isa::scalar).isa, Isa::scalar);
    EXPECT_EQ(active().isa, Isa::scalar);
    const KernelTable& chosen = select(Isa::avx2);
    EXPECT_EQ(chosen.isa, avx2_table() ? Isa::avx2 : Isa::scalar);
    select(before);
}

}  // namespace
}  // namespace tscm::kernels
