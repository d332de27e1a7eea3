#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wmw/error.hpp"
#include "wmw/variance_bc.hpp"

using namespace wmw;

namespace {
TwoSampleData make(std::vector<double> x, std::vector<double> y) { return validate(x, y); }
}  // namespace

TEST(BcComponents, HandComputedExample) {
    const auto c = bc_components(make({1, 3}, {2, 4}), 0.5);
    EXPECT_DOUBLE_EQ(c.zeta1_hat_sq, 0.25);
    EXPECT_DOUBLE_EQ(c.zeta2_hat_sq, 0.25);
    EXPECT_DOUBLE_EQ(c.omega1, 0.125);
    EXPECT_DOUBLE_EQ(c.omega2, 0.125);
}

TEST(BcComponents, CompleteSeparationAtNull) {
    const auto c = bc_components(make({0, 0.1}, {10, 10.1}), 1.0);
    EXPECT_EQ(c.zeta1_hat_sq, 0.0);
    EXPECT_EQ(c.zeta2_hat_sq, 0.0);
}

TEST(BcComponents, RejectsTiesAndTinySamples) {
    EXPECT_THROW(bc_components(make({1, 2}, {2, 3}), 0.5), TiesPresent);
    EXPECT_THROW(bc_variance(make({1, 2}, {2, 3}), 0.3), TiesPresent);
    EXPECT_THROW(bc_components(make({1}, {2, 3}), 0.5), TooSmall);
}

TEST(BcVariance, HandComputedExample) {
    const auto v = bc_variance(make({1, 3}, {2, 4}), 0.5);
    EXPECT_DOUBLE_EQ(v.zeta1_star_sq, 0.3125);
    EXPECT_DOUBLE_EQ(v.zeta2_star_sq, 0.3125);
    EXPECT_DOUBLE_EQ(v.sigma_adj_sq, 1.25);
    EXPECT_FALSE(v.correction_applied);
    EXPECT_DOUBLE_EQ(v.sigma_final_sq, 1.25);
    EXPECT_DOUBLE_EQ(v.df, 2.0);
    EXPECT_FALSE(v.degenerate);
}

TEST(BcVariance, DegenerateFlag) {
    const auto v = bc_variance(make({0, 0.1}, {10, 10.1}), 1.0);
    EXPECT_TRUE(v.degenerate);
    EXPECT_EQ(v.sigma_adj_sq, 0.0);
    EXPECT_GT(v.df, 0.0);
}

TEST(BcVariance, MirroredSamplesGivePooledDf) {
    // y = -x makes both placement sets mirror images around 1/2.
    std::mt19937_64 rng(3);
    auto x = oracle::random_sample(rng, 25, false);
    std::vector<double> y;
    for (double v : x) y.push_back(-v);
    const auto v = bc_variance(make(x, y), 0.5);
    EXPECT_NEAR(v.zeta1_star_sq, v.zeta2_star_sq, 1e-15);
    EXPECT_NEAR(v.df, 2.0 * (25 - 1), 1e-9);
    EXPECT_TRUE(v.correction_applied);
    EXPECT_NEAR(v.sigma_final_sq, (1 - 2.0 / 25) * v.sigma_adj_sq, 1e-15);
}

TEST(BcVariance, MatchesSecondImplementation) {
    std::mt19937_64 rng(77);
    for (double a0 : {0.5, 0.3, 0.81}) {
        const auto x = oracle::random_sample(rng, 200, false);
        const auto y = oracle::random_sample(rng, 200, false);
        const auto v = bc_variance(make(x, y), a0);
        const auto ref = oracle::ref_bc(x, y, a0);
        EXPECT_NEAR(v.zeta1_star_sq, ref.zeta1_star, 1e-12);
        EXPECT_NEAR(v.zeta2_star_sq, ref.zeta2_star, 1e-12);
        EXPECT_NEAR(v.sigma_adj_sq, ref.sigma_adj, 1e-12);
        EXPECT_NEAR(v.df, ref.df, 1e-9 * ref.df);
    }
}

TEST(BcVariance, Properties) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> size(2, 60);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int rep = 0; rep < 300; ++rep) {
        const auto x = oracle::random_sample(rng, size(rng), false);
        const auto y = oracle::random_sample(rng, size(rng), false);
        const double a0 = unit(rng);
        const auto d = make(x, y);
        const auto c = bc_components(d, a0);
        const auto v = bc_variance(d, a0);
        EXPECT_GE(v.zeta1_star_sq, c.zeta1_hat_sq);
        EXPECT_GE(v.zeta2_star_sq, c.zeta2_hat_sq);
        if (v.zeta1_star_sq > 0 && v.zeta2_star_sq > 0) {
            EXPECT_GE(v.df, 1.0 - 1e-12);
            EXPECT_LE(v.df, static_cast<double>(x.size() + y.size() - 2) + 1e-9);
        }

        // Strictly increasing transform of both samples.
        std::vector<double> tx, ty;
        for (double e : x) tx.push_back(std::exp(e) * 3 + 1);
        for (double e : y) ty.push_back(std::exp(e) * 3 + 1);
        const auto w = bc_variance(make(tx, ty), a0);
        EXPECT_EQ(w.sigma_adj_sq, v.sigma_adj_sq);
        EXPECT_EQ(w.df, v.df);
    }
}
