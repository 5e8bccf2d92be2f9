#include <gtest/gtest.h>

#include <cmath>

#include "perdist/closed_forms.hpp"
#include "perdist/compat.hpp"
#include "perdist/product.hpp"
#include "perdist/rng.hpp"
#include "support/oracles.hpp"

using namespace perdist;

namespace {

CoefficientField random_field(int dim, int radius, Rng& rng) {
    CoefficientField f(dim, radius);
    f.for_each([&](const MultiIndex& k, const Complex&) { f.at(k) = rng.complex_in_square(); });
    return f;
}

double max_abs_diff(const CoefficientField& a, const CoefficientField& b) {
    double worst = 0.0;
    a.for_each([&](const MultiIndex& k, const Complex& v) {
        worst = std::max(worst, std::abs(v - b.coeff_or_zero(k)));
    });
    return worst;
}

}  // namespace

TEST(CauchyProduct, HarmonicTimesHarmonic) {
    const auto em = from_closed_form(ClosedFormSpec::harmonic(MultiIndex(2, 2, -1)), 4);
    const auto ek = from_closed_form(ClosedFormSpec::harmonic(MultiIndex(2, 1, 3)), 4);
    const auto p = cauchy_product_direct(em, ek);
    EXPECT_EQ(p.radius(), 8);
    p.for_each([&](const MultiIndex& k, const Complex& v) {
        EXPECT_EQ(v, k == MultiIndex(2, 3, 2) ? Complex(1, 0) : Complex(0, 0)) << k.str();
    });
    // FFT path places the same delta.
    const auto pf = cauchy_product_fft(em, ek);
    EXPECT_NEAR(std::abs(pf.at(MultiIndex(2, 3, 2)) - Complex(1, 0)), 0.0, 1e-12);
}

TEST(CauchyProduct, ConstantIsIdentity) {
    Rng rng(2);
    const auto f = random_field(1, 6, rng);
    const auto one = from_closed_form(ClosedFormSpec::constant(1), 2);
    const auto p = cauchy_product_direct(f, one);
    EXPECT_EQ(p.radius(), 8);
    p.for_each([&](const MultiIndex& k, const Complex& v) {
        EXPECT_EQ(v, f.coeff_or_zero(k));
    });
}

TEST(CauchyProduct, SquareWaveIsIdempotentUpToTruncation) {
    // sq^2 = sq pointwise, so the product field approximates the square
    // wave coefficients on the common box; the mismatch is pure
    // truncation error (0.0245 at N = 64 by the quadrature oracle,
    // shrinking like N^{-1/2}).
    auto l2_err = [](int n_r) {
        const auto sq = from_closed_form(ClosedFormSpec::square_wave(), n_r);
        const auto p = cauchy_product_fft(sq, sq);
        double err2 = 0.0;
        sq.for_each([&](const MultiIndex& k, const Complex& v) {
            err2 += std::norm(p.coeff_or_zero(k) - v);
        });
        return std::sqrt(err2);
    };
    const double e64 = l2_err(64);
    const double e256 = l2_err(256);
    EXPECT_LE(e64, 0.025);
    EXPECT_LE(e256, 0.66 * e64);
}

TEST(CauchyProduct, MatchesQuadratureOracle1d) {
    Rng rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const int n1 = rng.uniform_int(2, 16), n2 = rng.uniform_int(2, 16);
        const auto f1 = random_field(1, n1, rng);
        const auto f2 = random_field(1, n2, rng);
        const auto direct = cauchy_product_direct(f1, f2);
        const auto oracle = oracles::product_coefficients_by_quadrature_1d(f1, f2);
        EXPECT_LE(max_abs_diff(direct, oracle), 1e-10);
    }
}

TEST(CauchyProduct, FftMatchesDirect) {
    Rng rng(23);
    for (int dim : {1, 2}) {
        for (int trial = 0; trial < 4; ++trial) {
            const int n1 = rng.uniform_int(2, dim == 1 ? 32 : 16);
            const int n2 = rng.uniform_int(2, dim == 1 ? 32 : 16);
            const auto f1 = random_field(dim, n1, rng);
            const auto f2 = random_field(dim, n2, rng);
            EXPECT_LE(max_abs_diff(cauchy_product_direct(f1, f2), cauchy_product_fft(f1, f2)),
                      1e-10);
        }
    }
}

TEST(CauchyProduct, CommutativityIsExact) {
    Rng rng(31);
    const auto f1 = random_field(2, 9, rng);
    const auto f2 = random_field(2, 5, rng);
    EXPECT_TRUE(cauchy_product_direct(f1, f2) == cauchy_product_direct(f2, f1));
    const auto g1 = random_field(1, 17, rng);
    const auto g2 = random_field(1, 17, rng);
    EXPECT_TRUE(cauchy_product_direct(g1, g2) == cauchy_product_direct(g2, g1));
}

TEST(CauchyProduct, Bilinear) {
    Rng rng(37);
    const auto f = random_field(1, 10, rng);
    const auto g = random_field(1, 10, rng);
    const auto h = random_field(1, 8, rng);
    const Complex a{1.7, -0.3}, b{-0.4, 2.2};

    CoefficientField combo(1, 10);
    combo.for_each([&](const MultiIndex& k, const Complex&) {
        combo.at(k) = a * f.at(k) + b * g.at(k);
    });
    const auto lhs = cauchy_product_direct(combo, h);
    const auto pf = cauchy_product_direct(f, h);
    const auto pg = cauchy_product_direct(g, h);
    double worst = 0.0;
    lhs.for_each([&](const MultiIndex& k, const Complex& v) {
        worst = std::max(worst, std::abs(v - (a * pf.at(k) + b * pg.at(k))));
    });
    EXPECT_LE(worst, 1e-12);
}

TEST(CauchyProduct, CombTimesCombCentralGrowth) {
    for (int n_r : {4, 8, 16}) {
        const auto comb = from_closed_form(ClosedFormSpec::dirac_comb(2), n_r);
        const auto p = cauchy_product_fft(comb, comb);
        const double want = std::pow(2.0 * n_r + 1.0, 2);
        EXPECT_NEAR(std::abs(p.at(MultiIndex(2, 0, 0))), want, 1e-8 * want);
    }
    // The defining series at n = 0 diverges: partial sums (2r+1)^d.
    const auto comb = from_closed_form(ClosedFormSpec::dirac_comb(2), 64);
    const auto tr = convolution_series_trace(comb, comb, MultiIndex(2, 0, 0), {8, 16, 32, 64});
    EXPECT_EQ(tr.verdict, Verdict::divergent);
    EXPECT_GT(tr.slope, 0.2);
}

TEST(OrderBound, PaperFormulaValues) {
    EXPECT_DOUBLE_EQ(product_order_bound(0, 0, 0, 0, 1, 2), 2.5);
    EXPECT_DOUBLE_EQ(product_order_bound(1, 0, 0, 1, 2, 2), 7.5);
    EXPECT_DOUBLE_EQ(product_order_bound(0, 0, 0, 0, 1, 1), 2.0);
}

TEST(OrderBound, RejectsHypothesisViolations) {
    try {
        product_order_bound(0.5, 2.0, 1.0, 1.0, 1.0, 2);  // beta1 < alpha2
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("beta1 >= alpha2"), std::string::npos);
    }
    try {
        product_order_bound(2.0, 0.0, 0.0, 1.0, 1.0, 2);  // beta2 < alpha1
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("beta2 >= alpha1"), std::string::npos);
    }
    EXPECT_THROW(product_order_bound(0, 0, 0, 0, 0.5, 2), std::invalid_argument);
    EXPECT_THROW(product_order_bound(-0.5, 0, 0, 0, 1, 2), std::invalid_argument);
}

TEST(OrderBound, ConeSupportedPairTraceConvergesAtTau) {
    // Pair built to satisfy (5.4)-(5.6) on the standard cones with
    // alpha = 1.25, beta = 8.75, gamma = 2; the product trace at the
    // bound tau must classify convergent.
    const auto g1 = standard_cone_gamma1();
    const auto g2 = standard_cone_gamma2();
    const auto f1 = from_closed_form(ClosedFormSpec::cone_supported(g1, 0.0, -10.0), 64);
    const auto f2 = from_closed_form(ClosedFormSpec::cone_supported(g2, 0.0, -10.0), 64);
    const double tau = product_order_bound(1.25, 1.25, 8.75, 8.75, 2.0, 2);
    EXPECT_DOUBLE_EQ(tau, 13.5);
    const auto p = cauchy_product_fft(f1, f2);
    const auto tr = weighted_trace(p, -tau, {16, 32, 64, 128});
    EXPECT_EQ(tr.verdict, Verdict::convergent);
}

TEST(SobolevExponent, RuleAndPrecondition) {
    EXPECT_DOUBLE_EQ(sobolev_product_exponent(2.0, -1.0), -1.0);
    EXPECT_DOUBLE_EQ(sobolev_product_exponent(0.0, 0.0), 0.0);
    EXPECT_THROW(sobolev_product_exponent(3.0, -4.0), std::invalid_argument);
}

TEST(CauchyProduct, DimensionMismatchThrows) {
    const auto a = from_closed_form(ClosedFormSpec::constant(1), 4);
    const auto b = from_closed_form(ClosedFormSpec::constant(2), 4);
    EXPECT_THROW(cauchy_product_direct(a, b), std::invalid_argument);
    EXPECT_THROW(cauchy_product_fft(a, b), std::invalid_argument);
}

TEST(CauchyProduct, FftMatchesDirectOnCorpusPairs) {
    std::vector<CoefficientField> corpus1;
    corpus1.push_back(from_closed_form(ClosedFormSpec::square_wave(), 32));
    corpus1.push_back(from_closed_form(ClosedFormSpec::sawtooth(), 32));
    corpus1.push_back(from_closed_form(ClosedFormSpec::dirac_comb(1), 32));
    corpus1.push_back(from_closed_form(ClosedFormSpec::harmonic(MultiIndex(1, 5)), 32));
    for (const auto& a : corpus1)
        for (const auto& b : corpus1)
            EXPECT_LE(max_abs_diff(cauchy_product_direct(a, b), cauchy_product_fft(a, b)), 1e-10);

    std::vector<CoefficientField> corpus2;
    corpus2.push_back(from_closed_form(
        ClosedFormSpec::tensor(ClosedFormSpec::square_wave(), ClosedFormSpec::constant(1)), 16));
    corpus2.push_back(from_closed_form(ClosedFormSpec::dirac_comb(2), 16));
    corpus2.push_back(from_closed_form(
        ClosedFormSpec::cone_supported(standard_cone_gamma1(), 0.0, -10.0), 16));
    for (const auto& a : corpus2)
        for (const auto& b : corpus2)
            EXPECT_LE(max_abs_diff(cauchy_product_direct(a, b), cauchy_product_fft(a, b)), 1e-10);
}
