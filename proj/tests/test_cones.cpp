#include <gtest/gtest.h>

#include <cmath>

#include "perdist/cones.hpp"
#include "perdist/rng.hpp"
#include "support/oracles.hpp"

using namespace perdist;

TEST(Contains, StandardConeExamples) {
    const auto g1 = standard_cone_gamma1();  // {t>0, |s| <= t/2}
    EXPECT_TRUE(g1.contains(MultiIndex(2, 4, 2)));
    EXPECT_FALSE(g1.contains(MultiIndex(2, 0, 0)));  // strict t>0 excludes apex
    EXPECT_FALSE(g1.contains(MultiIndex(2, 4, 3)));
    EXPECT_TRUE(g1.contains(MultiIndex(2, 1, 0)));
    EXPECT_FALSE(g1.contains(MultiIndex(2, -4, 1)));
}

TEST(Contains, ApexTranslation) {
    const LatticeCone shifted(2, {HalfSpace{{1, 0, 0}, true}, HalfSpace{{1, -2, 0}, false},
                                  HalfSpace{{1, 2, 0}, false}},
                              Int3{5, -3, 0});
    EXPECT_TRUE(shifted.contains(MultiIndex(2, 9, -1)));    // (4,2) relative to apex
    EXPECT_FALSE(shifted.contains(MultiIndex(2, 5, -3)));   // apex, strict
    EXPECT_FALSE(shifted.contains(MultiIndex(2, 9, 0)));    // (4,3) relative
}

TEST(Disjointness, StandardPairIsDisjoint) {
    const auto r = disjoint_after_negation(standard_cone_gamma1(), standard_cone_gamma2());
    EXPECT_TRUE(r.disjoint);
    EXPECT_TRUE(r.certified);
}

TEST(Disjointness, ConeAgainstItsNegation) {
    const auto g1 = standard_cone_gamma1();
    const auto r = disjoint_after_negation(g1, g1.negated().closure());
    // Gamma2 = -Gamma1 means Gamma1 cap (-Gamma2) = Gamma1, nonempty.
    EXPECT_FALSE(r.disjoint);
}

TEST(Disjointness, SharedBoundaryRayIsDetected) {
    // Gamma1 = {t>=0, |s|<=t}, Gamma2 = {s>=0, |t|<=s}: the ray (1,-1)
    // lies in both Gamma1 and -Gamma2.
    const LatticeCone g1(2, {HalfSpace{{1, 0, 0}, false}, HalfSpace{{1, -1, 0}, false},
                             HalfSpace{{1, 1, 0}, false}});
    const LatticeCone g2(2, {HalfSpace{{0, 1, 0}, false}, HalfSpace{{-1, 1, 0}, false},
                             HalfSpace{{1, 1, 0}, false}});
    const auto r = disjoint_after_negation(g1, g2);
    EXPECT_FALSE(r.disjoint);
    EXPECT_TRUE(r.certified);

    // With strict edges the open cones are disjoint.
    const LatticeCone g1s(2, {HalfSpace{{1, 0, 0}, true}, HalfSpace{{1, -1, 0}, true},
                              HalfSpace{{1, 1, 0}, true}});
    const LatticeCone g2s(2, {HalfSpace{{0, 1, 0}, true}, HalfSpace{{-1, 1, 0}, true},
                              HalfSpace{{1, 1, 0}, true}});
    EXPECT_TRUE(disjoint_after_negation(g1s, g2s).disjoint);
    // But their closures still touch, so counting is refused.
    EXPECT_FALSE(closures_disjoint_after_negation(g1s, g2s).disjoint);
    EXPECT_THROW(intersection_count(g1s, g2s, MultiIndex(2, 3, 1)), std::runtime_error);
}

TEST(Disjointness, D3CircularCones) {
    const auto c1 = circular_cone(3, {1, 0, 0}, 20.0);
    const auto c2 = circular_cone(3, {0, 0, 1}, 20.0);
    const auto r = disjoint_after_negation(c1, c2);
    EXPECT_TRUE(r.disjoint);
    EXPECT_TRUE(r.certified);
    const auto s = disjoint_after_negation(c1, c1.negated());
    EXPECT_FALSE(s.disjoint);
}

TEST(IntersectionCount, StandardPairExamples) {
    const auto g1 = standard_cone_gamma1();
    const auto g2 = standard_cone_gamma2();
    EXPECT_EQ(intersection_count(g1, g2, MultiIndex(2, 0, 0)), 0);
    EXPECT_EQ(intersection_count(g1, g2, MultiIndex(2, 2, -2)), 0);
    EXPECT_EQ(intersection_count(g1, g2, MultiIndex(2, 6, 2)), 17);
}

TEST(IntersectionCount, MatchesBruteForce) {
    const auto g1 = standard_cone_gamma1();
    const auto g2 = standard_cone_gamma2();
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const MultiIndex n(2, rng.uniform_int(-24, 24), rng.uniform_int(-24, 24));
        EXPECT_EQ(intersection_count(g1, g2, n), oracles::brute_force_count(g1, g2, n))
            << "n=" << n.str();
    }
}

TEST(IntersectionCount, SymmetricInRoleSwap) {
    // c^1_{i,j}(n) = c^2_{j,i}(n): swapping the cones leaves counts equal.
    const auto g1 = standard_cone_gamma1();
    const auto g2 = standard_cone_gamma2();
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const MultiIndex n(2, rng.uniform_int(-20, 20), rng.uniform_int(-20, 20));
        EXPECT_EQ(intersection_count(g1, g2, n), intersection_count(g2, g1, n)) << n.str();
    }
}

TEST(CountGrowth, StandardPairQuadratic) {
    const auto fit = count_growth_fit(standard_cone_gamma1(), standard_cone_gamma2(),
                                      uniform_directions(2),
                                      {8, 16, 32, 64, 128});
    EXPECT_GE(fit.gamma_hat, 1.7);
    EXPECT_LE(fit.gamma_hat, 2.1);
    EXPECT_GT(fit.c_hat, 0.0);
}

TEST(CountGrowth, MaxCountOverR2Bounded) {
    // Remark-style bound: max_{|n|=r} c(n)/r^2 stays bounded across octaves.
    const auto g1 = standard_cone_gamma1();
    const auto g2 = standard_cone_gamma2();
    std::vector<double> ratios;
    for (int r : {16, 32, 64, 128, 256}) {
        double worst = 0.0;
        for (int i = 0; i < 32; ++i) {
            const double a = 2.0 * M_PI * i / 32;
            const MultiIndex n(2, static_cast<int>(std::llround(r * std::cos(a))),
                               static_cast<int>(std::llround(r * std::sin(a))));
            if (n.norm2() == 0) continue;
            const double c = static_cast<double>(intersection_count(g1, g2, n));
            worst = std::max(worst, c / (n.norm() * n.norm()));
        }
        ratios.push_back(worst);
    }
    const double lo = *std::min_element(ratios.begin(), ratios.end());
    const double hi = *std::max_element(ratios.begin(), ratios.end());
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(hi / lo, 2.0);
}

TEST(CountGrowth, DegenerateRayConeIsLinear) {
    // c2 a single lattice ray along (1,1): one-parameter family of counts.
    const LatticeCone ray(2, {HalfSpace{{1, -1, 0}, false}, HalfSpace{{-1, 1, 0}, false},
                              HalfSpace{{1, 1, 0}, false}});
    const auto fit = count_growth_fit(standard_cone_gamma1(), ray,
                                      uniform_directions(2),
                                      {8, 16, 32, 64, 128});
    EXPECT_LE(fit.gamma_hat, 1.1);
    EXPECT_GT(fit.gamma_hat, 0.5);
}

TEST(CountGrowth, D3Exploratory) {
    // The paper leaves d >= 3 open; we only report the fitted exponent.
    const auto c1 = circular_cone(3, {1, 0, 0}, 20.0, 8, 1000);
    const auto c2 = circular_cone(3, {0, 0, 1}, 20.0, 8, 1000);
    const auto fit = count_growth_fit(c1, c2, uniform_directions(3),
                                      {4, 8, 16, 32});
    EXPECT_TRUE(std::isfinite(fit.gamma_hat));
    EXPECT_GT(fit.gamma_hat, 1.0);  // some genuine growth
    EXPECT_LT(fit.gamma_hat, 4.0);
}

TEST(Separation, IdenticalConesRejected) {
    const auto s = sector_cone(0.0, 15.0);
    EXPECT_THROW(cone_separation_constant(s, s, 50), std::invalid_argument);
}

TEST(Separation, HalfLineD1) {
    const auto c = halfline_cone(1);
    const double v = cone_separation_constant(c, c, 100);
    EXPECT_GE(v, 1.0);
    EXPECT_LT(v, 1.5);
}

TEST(Separation, SectorPairStabilizes) {
    const auto inner = sector_cone(0.0, 15.0);
    const auto outer = sector_cone(0.0, 30.0);
    const double c100 = cone_separation_constant(inner, outer, 100);
    const double c200 = cone_separation_constant(inner, outer, 200);
    EXPECT_GT(c100, 0.0);
    EXPECT_GT(c200, 0.0);
    EXPECT_NEAR(c200 / c100, 1.0, 0.10);
}

TEST(CountGrowth, AllZeroCountsGiveZeroExponent) {
    // Sampling only directions where the counting region is empty.
    const auto fit = count_growth_fit(standard_cone_gamma1(), standard_cone_gamma2(),
                                      {{0.0, -1.0, 0.0}}, {8, 16, 32, 64});
    EXPECT_DOUBLE_EQ(fit.gamma_hat, 0.0);
    EXPECT_DOUBLE_EQ(fit.c_hat, 0.0);
    for (const auto& [r, c] : fit.samples) EXPECT_EQ(c, 0);
}
