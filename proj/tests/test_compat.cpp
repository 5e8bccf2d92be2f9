#include <gtest/gtest.h>

#include <cmath>

#include "perdist/closed_forms.hpp"
#include "perdist/compat.hpp"
#include "perdist/rng.hpp"

using namespace perdist;

namespace {

LatticeCone right_halfplane() { return LatticeCone(2, {HalfSpace{{1, 0, 0}, true}}); }

LatticeCone quadrant() {
    return LatticeCone(2, {HalfSpace{{1, 0, 0}, true}, HalfSpace{{0, 1, 0}, false}});
}

}  // namespace

TEST(ConeSum, CombOverHalfplane) {
    // sum <n>^{-2.5} over a half-plane has an R^{-1/2} tail, so the trace
    // needs deep radii before the fitted slope settles under 0.05.
    const auto comb = from_closed_form(ClosedFormSpec::dirac_comb(2), 512);
    const std::vector<int> radii{128, 256, 512};
    EXPECT_EQ(cone_sum(comb, right_halfplane(), -1.25, radii).verdict, Verdict::convergent);
    EXPECT_EQ(cone_sum(comb, right_halfplane(), 0.0, radii).verdict, Verdict::divergent);
}

TEST(ConeSum, ZeroFieldConverges) {
    const CoefficientField zero(2, 32);
    const auto tr = cone_sum(zero, quadrant(), 3.0, {8, 16, 32});
    EXPECT_EQ(tr.verdict, Verdict::convergent);
    EXPECT_DOUBLE_EQ(tr.sums.back(), 0.0);
    EXPECT_DOUBLE_EQ(tr.slope, 0.0);
}

TEST(ConeSum, InsidePlusComplementIsFullNorm) {
    Rng rng(13);
    CoefficientField f(2, 64);
    f.for_each([&](const MultiIndex& k, const Complex&) { f.at(k) = rng.complex_in_square(); });
    const std::vector<int> radii{8, 16, 32, 64};
    const double s = 0.6;
    const auto in = cone_sum(f, quadrant(), s, radii, false);
    const auto out = cone_sum(f, quadrant(), s, radii, true);
    const auto full = weighted_trace(f, s, radii);
    for (std::size_t i = 0; i < radii.size(); ++i)
        EXPECT_NEAR(in.sums[i] + out.sums[i], full.sums[i], 1e-10 * full.sums[i]);
}

TEST(ConeSum, MonotoneInS) {
    // A divergent cone sum stays divergent when s increases.
    const auto comb = from_closed_form(ClosedFormSpec::dirac_comb(2), 256);
    const std::vector<int> radii{32, 64, 128, 256};
    bool seen_divergent = false;
    for (double s : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
        const auto v = cone_sum(comb, quadrant(), s, radii).verdict;
        if (seen_divergent) EXPECT_EQ(v, Verdict::divergent) << "s=" << s;
        if (v == Verdict::divergent) seen_divergent = true;
    }
    EXPECT_TRUE(seen_divergent);
}

TEST(ConeSum, ScalingInvariance) {
    Rng rng(29);
    CoefficientField f(2, 64);
    f.for_each([&](const MultiIndex& k, const Complex&) {
        f.at(k) = rng.complex_in_square() * bracket(k, -1.0);
    });
    CoefficientField g(2, 64);
    f.for_each([&](const MultiIndex& k, const Complex& v) { g.at(k) = Complex(0.0, -3.5) * v; });
    const std::vector<int> radii{8, 16, 32, 64};
    for (double s : {-2.0, -0.5, 0.0, 1.0}) {
        EXPECT_EQ(cone_sum(f, quadrant(), s, radii).verdict,
                  cone_sum(g, quadrant(), s, radii).verdict);
    }
    const auto pf = estimate_decay_exponents(f, quadrant());
    const auto pg = estimate_decay_exponents(g, quadrant());
    EXPECT_EQ(pf.alpha, pg.alpha);
    EXPECT_EQ(pf.beta, pg.beta);
    EXPECT_EQ(pf.alpha_conclusive, pg.alpha_conclusive);
    EXPECT_EQ(pf.beta_conclusive, pg.beta_conclusive);
}

TEST(DecayExponents, ConeSupportedEnvelope) {
    // |a| = 1 on Gamma1, <k>^{-10} off it: alpha = d/2 + margin = 1.25,
    // beta around 8.5-8.75 (limited by 20 - 2 beta > 2).
    const auto g1 = standard_cone_gamma1();
    const auto f = from_closed_form(ClosedFormSpec::cone_supported(g1, 0.0, -10.0), 512);
    const auto p = estimate_decay_exponents(f, g1, {64, 128, 256, 512});
    EXPECT_TRUE(p.alpha_conclusive);
    EXPECT_DOUBLE_EQ(p.alpha, 1.25);
    EXPECT_TRUE(p.beta_conclusive);
    EXPECT_GE(p.beta, 8.0);
    EXPECT_LT(p.beta, 9.0);
}

TEST(DecayExponents, ZeroField) {
    const CoefficientField zero(2, 32);
    const auto p = estimate_decay_exponents(zero, quadrant());
    EXPECT_TRUE(p.alpha_conclusive);
    EXPECT_TRUE(p.beta_conclusive);
    EXPECT_DOUBLE_EQ(p.alpha, 0.0);
    EXPECT_DOUBLE_EQ(p.beta, kExponentGridMax);
}

TEST(DecayExponents, CombFlatComplementIsFlagged) {
    const auto comb = from_closed_form(ClosedFormSpec::dirac_comb(2), 512);
    const auto p = estimate_decay_exponents(comb, quadrant(), {64, 128, 256, 512});
    EXPECT_TRUE(p.alpha_conclusive);
    EXPECT_DOUBLE_EQ(p.alpha, 1.25);
    EXPECT_FALSE(p.beta_conclusive);  // complement is flat: no beta >= 0 works
}

TEST(Compatibility, ConeSupportedPairPasses) {
    const auto g1 = standard_cone_gamma1();
    const auto g2 = standard_cone_gamma2();
    const auto f1 = from_closed_form(ClosedFormSpec::cone_supported(g1, 0.0, -10.0), 64);
    const auto f2 = from_closed_form(ClosedFormSpec::cone_supported(g2, 0.0, -10.0), 64);
    const auto rep = check_compatibility(f1, {g1}, f2, {g2});
    EXPECT_TRUE(rep.verdict) << (rep.diagnostics.empty() ? "" : rep.diagnostics.front());
    EXPECT_GE(rep.gamma, 1.0);
    EXPECT_LE(rep.gamma, 2.25);
    EXPECT_GT(rep.tau, 0.0);

    // Soundness at desk scale: the product trace at the reported tau
    // classifies convergent.
    const auto p = cauchy_product_fft(f1, f2);
    const auto tr = weighted_trace(p, -rep.tau, {16, 32, 64, 128});
    EXPECT_EQ(tr.verdict, Verdict::convergent);
}

TEST(Compatibility, CombPairFails) {
    const auto g1 = standard_cone_gamma1();
    const auto g2 = standard_cone_gamma2();
    const auto comb = from_closed_form(ClosedFormSpec::dirac_comb(2), 64);
    const auto rep = check_compatibility(comb, {g1}, comb, {g2});
    EXPECT_FALSE(rep.verdict);
    EXPECT_FALSE(rep.diagnostics.empty());
}

TEST(Compatibility, NegatedConeFailsDisjointness) {
    const auto g1 = standard_cone_gamma1();
    const auto neg = g1.negated();
    const auto f1 = from_closed_form(ClosedFormSpec::cone_supported(g1, 0.0, -10.0), 64);
    const auto f2 = from_closed_form(ClosedFormSpec::cone_supported(neg, 0.0, -10.0), 64);
    const auto rep = check_compatibility(f1, {g1}, f2, {neg});
    EXPECT_FALSE(rep.verdict);
    bool found = false;
    for (const auto& d : rep.diagnostics)
        if (d.find("not empty") != std::string::npos) found = true;
    EXPECT_TRUE(found);
}

TEST(Compatibility, DimensionMismatchThrows) {
    const auto f1 = from_closed_form(ClosedFormSpec::dirac_comb(1), 32);
    const auto f2 = from_closed_form(ClosedFormSpec::dirac_comb(2), 32);
    EXPECT_THROW(check_compatibility(f1, {halfline_cone(1)}, f2, {standard_cone_gamma2()}),
                 std::invalid_argument);
}
