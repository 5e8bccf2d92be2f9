#include <gtest/gtest.h>

#include <cmath>

#include "perdist/distributions.hpp"
#include "perdist/product.hpp"
#include "perdist/wavefront.hpp"

using namespace perdist;

namespace {

CoefficientField square_wave_in_x(int radius) {
    return from_closed_form(
        ClosedFormSpec::tensor(ClosedFormSpec::square_wave(), ClosedFormSpec::constant(1)), radius);
}

CoefficientField square_wave_in_y(int radius) {
    return from_closed_form(
        ClosedFormSpec::tensor(ClosedFormSpec::constant(1), ClosedFormSpec::square_wave()), radius);
}

const std::array<double, kMaxDim> kJumpPoint{0.5, 0.37, 0};  // on the jump line x = 1/2

LocalizationWindow window2d(int m = 8) { return LocalizationWindow(2, {0, 0, 0}, 0.9, 0.25, m); }
LocalizationWindow window1d() { return LocalizationWindow(1, {0, 0, 0}, 0.9, 0.3, 6); }

}  // namespace

TEST(Regularity, SquareWaveAcrossAndAlongJump) {
    const auto f = square_wave_in_x(256);
    const auto w = window2d();
    // Across the jump: H^0-regular (l2 function), not H^1-regular.
    EXPECT_TRUE(is_regular_at(f, kJumpPoint, {1, 0, 0}, 0.0, 20.0, w, 128).regular());
    EXPECT_EQ(is_regular_at(f, kJumpPoint, {1, 0, 0}, 1.0, 20.0, w, 128).verdict,
              Verdict::divergent);
    // Along the jump line the cone misses the n1-axis: regular at every
    // tested s up to 6.
    for (double s : {0.0, 3.0, 6.0})
        EXPECT_TRUE(is_regular_at(f, kJumpPoint, {0, 1, 0}, s, 20.0, w, 128).regular())
            << "s=" << s;
}

TEST(Regularity, TorusGridOverloadAgrees) {
    const auto f = square_wave_in_x(256);
    const auto grid = synthesize_partial_sum(f, 1024);
    const auto w = window2d();
    const auto a = is_regular_at(f, kJumpPoint, {1, 0, 0}, 1.0, 20.0, w, 128);
    const auto b = is_regular_at(grid, kJumpPoint, {1, 0, 0}, 1.0, 20.0, w, 128);
    EXPECT_EQ(a.verdict, b.verdict);
}

TEST(Threshold, SquareWaveD1) {
    const auto sq = from_closed_form(ClosedFormSpec::square_wave(), 4096);
    const auto th = sobolev_threshold(sq, {0.5, 0, 0}, {1, 0, 0}, 20.0, window1d(), 2048);
    EXPECT_FALSE(th.unbounded);
    EXPECT_NEAR(th.s_star, 0.5, 0.1);
}

TEST(Threshold, SawtoothD1) {
    const auto saw = from_closed_form(ClosedFormSpec::sawtooth(), 4096);
    const auto th = sobolev_threshold(saw, {0, 0, 0}, {-1, 0, 0}, 20.0, window1d(), 2048);
    EXPECT_FALSE(th.unbounded);
    EXPECT_NEAR(th.s_star, 0.5, 0.1);
}

TEST(Threshold, TrigPolynomialIsRegularEverywhere) {
    CoefficientField trig(1, 8);
    trig.at(MultiIndex(1, 3)) = Complex(1.0, 0.0);
    trig.at(MultiIndex(1, -2)) = Complex(0.7, 0.2);
    trig.at(MultiIndex(1, 0)) = Complex(0.5, 0.0);
    const auto th = sobolev_threshold(trig, {0.5, 0, 0}, {1, 0, 0}, 20.0, window1d(), 2048);
    EXPECT_TRUE(th.unbounded);
    EXPECT_TRUE(std::isinf(th.s_star));
}

TEST(Threshold, MonotoneInS) {
    // Once divergent, larger s stays divergent.
    const auto sq = from_closed_form(ClosedFormSpec::square_wave(), 4096);
    const auto loc = localize_at(sq, {0.5, 0, 0}, window1d(), 2048);
    bool seen_divergent = false;
    for (double s = 0.0; s <= 2.0; s += 0.1) {
        const auto v = regularity_from_localized(loc, {1, 0, 0}, s, 20.0).verdict;
        if (seen_divergent) EXPECT_EQ(v, Verdict::divergent) << "s=" << s;
        if (v == Verdict::divergent) seen_divergent = true;
    }
    EXPECT_TRUE(seen_divergent);
}

TEST(Threshold, ApertureMonotone) {
    // Regular with aperture theta stays regular with any smaller theta.
    const auto f = square_wave_in_x(256);
    const auto loc = localize_at(f, kJumpPoint, window2d(), 128);
    for (double theta : {30.0, 20.0, 10.0})
        EXPECT_TRUE(
            regularity_from_localized(loc, {M_SQRT1_2, M_SQRT1_2, 0}, 1.0, theta).regular())
            << theta;
}

TEST(Threshold, WindowInvariance) {
    // Verdicts agree across plateau widths eps in {0.2, 0.3, 0.4}.
    const auto sq = from_closed_form(ClosedFormSpec::square_wave(), 4096);
    for (double eps : {0.2, 0.3, 0.4}) {
        const LocalizationWindow w(1, {0, 0, 0}, 0.9, eps, 6);
        EXPECT_TRUE(is_regular_at(sq, {0.5, 0, 0}, {1, 0, 0}, 0.0, 20.0, w, 2048).regular());
        EXPECT_EQ(is_regular_at(sq, {0.5, 0, 0}, {1, 0, 0}, 1.0, 20.0, w, 2048).verdict,
                  Verdict::divergent);
    }
}

TEST(Scan, SquareWaveAxisDirections) {
    const auto f = square_wave_in_x(256);
    const auto rep = wavefront_scan(f, kJumpPoint, {1.0}, 16, 20.0, window2d(), 128);
    ASSERT_EQ(rep.rows.size(), 16u);
    for (const auto& row : rep.rows) {
        const double d0 = std::min(std::abs(row.angle_deg), std::abs(std::abs(row.angle_deg) - 180.0));
        if (d0 <= 25.0) continue;  // near +-(1,0): allowed to be non-regular
        EXPECT_EQ(row.verdicts[0], Verdict::convergent) << "angle " << row.angle_deg;
    }
    // The axis directions themselves are divergent.
    for (const auto& row : rep.rows)
        if (std::abs(row.angle_deg) < 1e-9 || std::abs(std::abs(row.angle_deg) - 180.0) < 1e-9)
            EXPECT_EQ(row.verdicts[0], Verdict::divergent);
    // Reported arcs cover only the two axis neighborhoods.
    ASSERT_EQ(rep.nonregular_arcs.size(), 2u);
    for (const auto& arc : rep.nonregular_arcs) {
        const double c = std::abs(arc.center_deg);
        EXPECT_TRUE(c < 1.0 || std::abs(c - 180.0) < 1.0) << arc.center_deg;
        EXPECT_LE(arc.half_width_deg, 45.0);
    }
}

TEST(Scan, SmoothFieldHasEmptyNonregularSet) {
    CoefficientField trig(2, 8);
    trig.at(MultiIndex(2, 2, 1)) = Complex(1.0, -0.5);
    trig.at(MultiIndex(2, 0, 0)) = Complex(0.3, 0.0);
    const auto rep = wavefront_scan(trig, {0.25, 0.4, 0}, {1.0}, 16, 20.0, window2d(), 128);
    EXPECT_TRUE(rep.nonregular_arcs.empty());
    for (const auto& row : rep.rows) EXPECT_EQ(row.verdicts[0], Verdict::convergent);
}

TEST(Scan, SuperpositionMeetsBothAxes) {
    CoefficientField f = square_wave_in_x(256);
    const auto g = square_wave_in_y(256);
    f.for_each([&](const MultiIndex& k, const Complex& v) { f.at(k) = v + g.at(k); });
    const auto rep = wavefront_scan(f, {0.5, 0.5, 0}, {1.0}, 16, 20.0, window2d(), 128);
    bool hit_x = false, hit_y = false;
    for (const auto& arc : rep.nonregular_arcs) {
        const double c = std::fmod(std::abs(arc.center_deg), 180.0);
        if (std::abs(c) < 5.0 || std::abs(c - 180.0) < 5.0) hit_x = true;
        if (std::abs(c - 90.0) < 5.0) hit_y = true;
    }
    EXPECT_TRUE(hit_x);
    EXPECT_TRUE(hit_y);
}

TEST(Scan, ThresholdAtSingularDirection) {
    const auto f = square_wave_in_x(256);
    const auto th = sobolev_threshold(f, kJumpPoint, {1, 0, 0}, 20.0, window2d(), 128);
    EXPECT_NEAR(th.s_star, 0.5, 0.15);
}

TEST(Converse, LocalizationPreservesConeRegularity) {
    // Small on Gamma (inside exponent -10), flat outside; the global
    // Gamma-trace at s=2 converges, and localizing at a point where the
    // flat part vanishes keeps the Gamma1-trace convergent. Verdict is
    // stable across window smoothness m in {3, 5, 8}.
    const auto gamma = sector_cone(0.0, 40.0);
    const auto gamma1 = sector_cone(0.0, 15.0);
    const auto f = from_closed_form(ClosedFormSpec::cone_supported(gamma, -10.0, 0.0), 256);
    for (int m : {3, 5, 8}) {
        const LocalizationWindow w(2, {0, 0, 0}, 0.9, 0.25, m);
        EXPECT_TRUE(converse_regularity_check(f, gamma, 2.0, gamma1, w, {0.5, 0.5, 0})) << m;
    }
}

TEST(Converse, PreconditionRejectsComb) {
    const auto comb = from_closed_form(ClosedFormSpec::dirac_comb(2), 64);
    const auto gamma = sector_cone(0.0, 40.0);
    const auto gamma1 = sector_cone(0.0, 15.0);
    EXPECT_THROW(
        converse_regularity_check(comb, gamma, 0.0, gamma1, window2d(), {0.5, 0.5, 0}),
        std::invalid_argument);
}

TEST(Converse, RequiresCompactContainment) {
    const auto gamma = sector_cone(0.0, 40.0);
    const auto f = from_closed_form(ClosedFormSpec::cone_supported(gamma, -10.0, 0.0), 64);
    EXPECT_THROW(converse_regularity_check(f, gamma, 2.0, gamma, window2d(), {0.5, 0.5, 0}),
                 std::invalid_argument);
}

TEST(Corollary, SchwartzFactorPreservesRegularity) {
    // Cone-summable coefficients over Gamma give regular directions well
    // inside Gamma; multiplying by a rapidly decaying factor (the phi-hat
    // of the V_s picture) never shrinks the regular set.
    const auto gamma = sector_cone(0.0, 40.0);
    const auto f = from_closed_form(ClosedFormSpec::cone_supported(gamma, -10.0, -1.0), 256);
    const auto w = window2d();
    const std::array<double, kMaxDim> x0{0.3, 0.7, 0};
    const auto rep = wavefront_scan(f, x0, {2.0}, 16, 10.0, w, 128);
    CoefficientField g = f;
    g.for_each([&](const MultiIndex& k, const Complex& v) {
        g.at(k) = v * std::exp(-static_cast<double>(k.norm2()) / 5000.0);
    });
    const auto rep2 = wavefront_scan(g, x0, {2.0}, 16, 10.0, w, 128);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (rep.rows[i].verdicts[0] == Verdict::convergent)
            EXPECT_EQ(rep2.rows[i].verdicts[0], Verdict::convergent)
                << "direction " << rep.rows[i].angle_deg;
    }
    // The center of Gamma is regular, the opposite direction is not
    // (coefficients off Gamma only decay like <n>^{-1}).
    EXPECT_EQ(rep.rows[0].verdicts[0], Verdict::convergent);
    bool found_bad = false;
    for (const auto& row : rep.rows)
        if (std::abs(std::abs(row.angle_deg) - 90.0) < 1.0 &&
            row.verdicts[0] != Verdict::convergent)
            found_bad = true;
    EXPECT_TRUE(found_bad);
}

TEST(EndToEnd, DisjointWavefrontsGiveFiniteProductOrder) {
    // Two localized fields whose scans confine the non-regular directions
    // to disjoint cone families: compatibility holds and the product's
    // order estimate is finite.
    const auto fx = square_wave_in_x(256);
    const auto fy = square_wave_in_y(256);
    const auto w = window2d();
    const std::array<double, kMaxDim> x0{0.5, 0.5, 0};
    const auto l1 = localize_at(fx, x0, w, 128);
    const auto l2 = localize_at(fy, x0, w, 128);

    // Scan containment at s = 1 (s_i >= tau_i = 0 for l2 functions).
    const auto rep1 = wavefront_scan(fx, x0, {1.0}, 16, 20.0, w, 128);
    for (const auto& arc : rep1.nonregular_arcs) {
        const double c = std::abs(arc.center_deg);
        EXPECT_TRUE(c < 25.0 || std::abs(c - 180.0) < 25.0);
    }
    const auto rep2 = wavefront_scan(fy, x0, {1.0}, 16, 20.0, w, 128);
    for (const auto& arc : rep2.nonregular_arcs)
        EXPECT_NEAR(std::abs(arc.center_deg), 90.0, 25.0);

    const std::vector<LatticeCone> cones1{sector_cone(0, 25), sector_cone(180, 25)};
    const std::vector<LatticeCone> cones2{sector_cone(90, 25), sector_cone(270, 25)};
    const auto rep = check_compatibility(l1, cones1, l2, cones2);
    EXPECT_TRUE(rep.verdict) << (rep.diagnostics.empty() ? "" : rep.diagnostics.front());

    const auto p = cauchy_product_fft(l1, l2);
    const auto est = order_estimate(p, {32, 64, 128, 256});
    EXPECT_TRUE(est.conclusive);
    EXPECT_LE(est.k0, rep.tau);
}
