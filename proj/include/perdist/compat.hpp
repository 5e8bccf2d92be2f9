// compat.hpp
// Compatible-coefficient-estimate machinery: cone-restricted weighted
// partial sums, decay-exponent estimation on a quarter-step grid, and the
// full compatibility verdict (cone disjointness + growth/decay exponents
// + counting bound) that feeds the product order bound.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "perdist/cones.hpp"
#include "perdist/field.hpp"
#include "perdist/product.hpp"
#include "perdist/trace.hpp"

namespace perdist {

constexpr double kExponentGridStep = 0.25;
constexpr double kExponentGridMax = 12.0;

/// Cumulative sum_{k in Lambda, |k| <= r} |a_k|^2 <k>^{2s} (or over the
/// complement of Lambda), classified by the convergence rule. A cone of
/// nullptr sums over the whole lattice.
inline PartialSumTrace weighted_trace(const CoefficientField& a, double s,
                                      const std::vector<int>& radii,
                                      const LatticeCone* cone = nullptr, bool complement = false) {
    validate_radii(radii);
    if (radii.back() > a.radius())
        throw std::invalid_argument("weighted_trace: radii must lie within the field's box");
    if (cone && cone->dim() != a.dim())
        throw std::invalid_argument("weighted_trace: cone dimension mismatch");
    std::vector<std::int64_t> r2(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i)
        r2[i] = static_cast<std::int64_t>(radii[i]) * radii[i];
    std::vector<double> sums(radii.size(), 0.0);
    a.for_each([&](const MultiIndex& k, const Complex& v) {
        const std::int64_t n2 = k.norm2();
        if (n2 > r2.back()) return;
        const double mag2 = std::norm(v);
        if (mag2 == 0.0) return;
        if (cone) {
            const bool inside = cone->contains(k);
            if (inside == complement) return;
        }
        const auto it = std::lower_bound(r2.begin(), r2.end(), n2);
        sums[static_cast<std::size_t>(it - r2.begin())] += mag2 * bracket(k, 2.0 * s);
    });
    for (std::size_t i = 1; i < sums.size(); ++i) sums[i] += sums[i - 1];
    return classify_partial_sums(radii, sums);
}

/// The sums of (5.4)/(5.5): cone_sum(a, cone, s, radii, complement).
inline PartialSumTrace cone_sum(const CoefficientField& a, const LatticeCone& cone, double s,
                                const std::vector<int>& radii, bool complement = false) {
    return weighted_trace(a, s, radii, &cone, complement);
}

struct DecayProfile {
    LatticeCone cone;
    double alpha{0.0};  // inside-cone tolerated growth: sum |a|^2 <k>^{-2 alpha} < inf
    double beta{0.0};   // outside-cone guaranteed decay: sum |a|^2 <k>^{2 beta} < inf
    bool alpha_conclusive{false};
    bool beta_conclusive{false};
};

/// Scans the quarter-step exponent grid: alpha is the smallest value
/// whose inside-cone trace converges, beta the largest whose complement
/// trace converges; inconclusive scans are flagged.
inline DecayProfile estimate_decay_exponents(const CoefficientField& a, const LatticeCone& cone,
                                             std::vector<int> radii = {}) {
    if (a.radius() < 16)
        throw std::invalid_argument("estimate_decay_exponents: field radius must be >= 16");
    if (radii.empty()) radii = dyadic_radii(a.radius());
    DecayProfile p{cone, 0.0, 0.0, false, false};
    for (double alpha = 0.0; alpha <= kExponentGridMax + 1e-9; alpha += kExponentGridStep) {
        if (cone_sum(a, cone, -alpha, radii, false).verdict == Verdict::convergent) {
            p.alpha = alpha;
            p.alpha_conclusive = true;
            break;
        }
    }
    if (!p.alpha_conclusive) p.alpha = kExponentGridMax;
    for (double beta = kExponentGridMax; beta >= -1e-9; beta -= kExponentGridStep) {
        if (cone_sum(a, cone, beta, radii, true).verdict == Verdict::convergent) {
            p.beta = std::max(beta, 0.0);
            p.beta_conclusive = true;
            break;
        }
    }
    return p;
}

struct PairCheck {
    int i{0}, j{0};
    DisjointnessResult disjoint;
    CountGrowthFit fit;
};

struct CompatibilityReport {
    std::vector<DecayProfile> profiles1;
    std::vector<DecayProfile> profiles2;
    std::vector<PairCheck> pairs;
    double alpha1{0}, beta1{0}, alpha2{0}, beta2{0};
    double gamma{1.0};
    bool verdict{false};
    double tau{0.0};  // meaningful only when verdict is true
    std::vector<std::string> diagnostics;
};

/// Runs the full Definition-5.4 check for two fields with candidate cone
/// lists: per-cone decay profiles, pairwise disjointness after negation,
/// count-growth fits, the exponent inequalities beta1 >= alpha2 >= 0 and
/// beta2 >= alpha1 >= 0, and on success the product order bound tau.
inline CompatibilityReport check_compatibility(const CoefficientField& f1,
                                               const std::vector<LatticeCone>& cones1,
                                               const CoefficientField& f2,
                                               const std::vector<LatticeCone>& cones2) {
    if (f1.dim() != f2.dim()) throw std::invalid_argument("check_compatibility: dimension mismatch");
    if (cones1.empty() || cones2.empty())
        throw std::invalid_argument("check_compatibility: need at least one cone per factor");
    const int d = f1.dim();
    for (const auto& c : cones1)
        if (c.dim() != d) throw std::invalid_argument("check_compatibility: cone dimension mismatch");
    for (const auto& c : cones2)
        if (c.dim() != d) throw std::invalid_argument("check_compatibility: cone dimension mismatch");

    CompatibilityReport rep;
    bool ok = true;

    for (const auto& c : cones1) rep.profiles1.push_back(estimate_decay_exponents(f1, c));
    for (const auto& c : cones2) rep.profiles2.push_back(estimate_decay_exponents(f2, c));

    auto aggregate = [&](const std::vector<DecayProfile>& ps, double& alpha, double& beta,
                         const char* tag) {
        alpha = 0.0;
        beta = kExponentGridMax;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (!ps[i].alpha_conclusive) {
                ok = false;
                rep.diagnostics.push_back(std::string(tag) + ": (5.4) first sum inconclusive for cone " +
                                          std::to_string(i + 1));
            }
            if (!ps[i].beta_conclusive) {
                ok = false;
                rep.diagnostics.push_back(std::string(tag) +
                                          ": (5.4) complement sum fails for every beta >= 0 (cone " +
                                          std::to_string(i + 1) + ")");
            }
            alpha = std::max(alpha, ps[i].alpha);
            beta = std::min(beta, ps[i].beta);
        }
    };
    aggregate(rep.profiles1, rep.alpha1, rep.beta1, "f1");
    aggregate(rep.profiles2, rep.alpha2, rep.beta2, "f2");

    double gamma_hat = 0.0;
    const auto directions = uniform_directions(d, 16);
    const std::vector<int> fit_radii = {8, 16, 32, 64};
    for (std::size_t i = 0; i < cones1.size(); ++i)
        for (std::size_t j = 0; j < cones2.size(); ++j) {
            PairCheck pc;
            pc.i = static_cast<int>(i + 1);
            pc.j = static_cast<int>(j + 1);
            pc.disjoint = disjoint_after_negation(cones1[i], cones2[j]);
            if (!pc.disjoint.disjoint) {
                ok = false;
                rep.diagnostics.push_back("pair (" + std::to_string(pc.i) + "," + std::to_string(pc.j) +
                                          "): Lambda1 cap (-Lambda2) not empty");
            } else if (closures_disjoint_after_negation(cones1[i], cones2[j]).disjoint) {
                pc.fit = count_growth_fit(cones1[i], cones2[j], directions, fit_radii);
                gamma_hat = std::max(gamma_hat, pc.fit.gamma_hat);
            } else {
                ok = false;
                rep.diagnostics.push_back("pair (" + std::to_string(pc.i) + "," + std::to_string(pc.j) +
                                          "): cone closures touch; counting bound (5.6) unavailable");
            }
            rep.pairs.push_back(std::move(pc));
        }

    // gamma >= 1, rounded up to the grid step.
    rep.gamma = std::max(1.0, std::ceil(gamma_hat / kExponentGridStep) * kExponentGridStep);

    if (!(rep.beta1 >= rep.alpha2)) {
        ok = false;
        rep.diagnostics.push_back("exponents: beta1 >= alpha2 fails");
    }
    if (!(rep.beta2 >= rep.alpha1)) {
        ok = false;
        rep.diagnostics.push_back("exponents: beta2 >= alpha1 fails");
    }

    rep.verdict = ok;
    if (ok) rep.tau = product_order_bound(rep.alpha1, rep.alpha2, rep.beta1, rep.beta2, rep.gamma, d);
    return rep;
}

}  // namespace perdist
