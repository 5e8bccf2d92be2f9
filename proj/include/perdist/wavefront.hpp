// wavefront.hpp
// Discrete Sobolev wave-front estimation on the torus: a direction is
// microlocally H^s-regular at x0 when the cone-restricted weighted sum
// of the localized coefficients converges. Circular frequency cones are
// realized as polyhedral cones with integer normals so that membership
// stays exact; d=1 "cones" are the two half-lines.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "perdist/compat.hpp"
#include "perdist/cones.hpp"
#include "perdist/distributions.hpp"
#include "perdist/field.hpp"
#include "perdist/window.hpp"

namespace perdist {

/// Polyhedral frequency cone around direction xi0 with half-angle theta.
inline LatticeCone direction_cone(int dim, const std::array<double, kMaxDim>& xi0,
                                  double theta_deg) {
    if (dim == 1) return halfline_cone(xi0[0] >= 0 ? 1 : -1);
    return circular_cone(dim, xi0, theta_deg);
}

namespace detail {

inline int next_pow2(int v) {
    int p = 1;
    while (p < v) p *= 2;
    return p;
}

}  // namespace detail

/// Localized coefficients (f psi)_per for a window recentred at x0; the
/// synthesis grid is chosen to oversample both the output radius and the
/// input band.
inline CoefficientField localize_at(const CoefficientField& f,
                                    const std::array<double, kMaxDim>& x0,
                                    const LocalizationWindow& window, int radius) {
    const int m_grid = detail::next_pow2(std::max(4 * radius, 2 * f.radius() + 2));
    return periodize_localized(f, window.recentred(x0), radius, m_grid);
}

struct RegularityResult {
    Verdict verdict{Verdict::inconclusive};
    PartialSumTrace trace;
    LatticeCone cone;

    bool regular() const { return verdict == Verdict::convergent; }
};

/// Theorem-5.3-style check on a pre-localized coefficient field.
inline RegularityResult regularity_from_localized(const CoefficientField& localized,
                                                  const std::array<double, kMaxDim>& xi0,
                                                  double s, double theta_deg,
                                                  std::vector<int> radii = {}) {
    if (theta_deg <= 0.0 || theta_deg >= 90.0)
        throw std::invalid_argument("regularity check: aperture must be in (0, 90) degrees");
    if (radii.empty()) radii = dyadic_radii(localized.radius(), 4);
    RegularityResult r;
    r.cone = direction_cone(localized.dim(), xi0, theta_deg);
    r.trace = cone_sum(localized, r.cone, s, radii, false);
    r.verdict = r.trace.verdict;
    return r;
}

/// Localize f at x0 with the window, then classify the cone trace at
/// exponent s around direction xi0.
inline RegularityResult is_regular_at(const CoefficientField& f,
                                      const std::array<double, kMaxDim>& x0,
                                      const std::array<double, kMaxDim>& xi0, double s,
                                      double theta_deg, const LocalizationWindow& window,
                                      int radius) {
    return regularity_from_localized(localize_at(f, x0, window, radius), xi0, s, theta_deg);
}

inline RegularityResult is_regular_at(const TorusGrid& f, const std::array<double, kMaxDim>& x0,
                                      const std::array<double, kMaxDim>& xi0, double s,
                                      double theta_deg, const LocalizationWindow& window,
                                      int radius) {
    return regularity_from_localized(periodize_localized(f, window.recentred(x0), radius), xi0, s,
                                     theta_deg);
}

struct ThresholdResult {
    double s_regular{0.0};    // largest grid s classified convergent
    double s_singular{0.0};   // smallest grid s classified divergent
    double s_star{0.0};       // midpoint of the boundary band
    bool unbounded{false};    // regular at every tested s: s_star = +infinity
    bool band_narrow{true};   // boundary pinned to within two grid steps
};

constexpr double kThresholdSMin = -6.0;
constexpr double kThresholdSMax = 6.0;
constexpr double kThresholdStep = 0.05;

/// Bisects the s-grid [-6,6] (step 0.05) for the convergent/divergent
/// boundary of the direction-cone trace. The two monotone boundaries
/// (sup of convergent, inf of divergent) bracket the inconclusive dead
/// band, which is reported rather than rounded away.
inline ThresholdResult sobolev_threshold(const CoefficientField& f,
                                         const std::array<double, kMaxDim>& x0,
                                         const std::array<double, kMaxDim>& xi0, double theta_deg,
                                         const LocalizationWindow& window, int radius) {
    const CoefficientField loc = localize_at(f, x0, window, radius);
    const int n_steps = static_cast<int>(std::llround((kThresholdSMax - kThresholdSMin) / kThresholdStep));
    std::vector<std::optional<Verdict>> cache(static_cast<std::size_t>(n_steps) + 1);
    auto verdict_at = [&](int i) {
        auto& slot = cache[static_cast<std::size_t>(i)];
        if (!slot)
            slot = regularity_from_localized(loc, xi0, kThresholdSMin + i * kThresholdStep,
                                             theta_deg)
                       .verdict;
        return *slot;
    };

    ThresholdResult res;
    if (verdict_at(n_steps) == Verdict::convergent) {
        res.s_regular = kThresholdSMax;
        res.s_singular = std::numeric_limits<double>::infinity();
        res.s_star = std::numeric_limits<double>::infinity();
        res.unbounded = true;
        return res;
    }

    if (verdict_at(0) == Verdict::divergent) {
        res.s_regular = -std::numeric_limits<double>::infinity();
        res.s_singular = kThresholdSMin;
        res.s_star = -std::numeric_limits<double>::infinity();
        return res;
    }

    // sup{ s : convergent }: predicate is monotone (weights grow with s).
    int lo = 0, hi = n_steps;
    if (verdict_at(0) != Verdict::convergent) {
        res.s_regular = -std::numeric_limits<double>::infinity();
        lo = 0;
    } else {
        while (hi - lo > 1) {
            const int mid = (lo + hi) / 2;
            (verdict_at(mid) == Verdict::convergent ? lo : hi) = mid;
        }
        res.s_regular = kThresholdSMin + lo * kThresholdStep;
    }

    // inf{ s : divergent }.
    int dlo = lo, dhi = n_steps;
    if (verdict_at(n_steps) != Verdict::divergent) {
        res.s_singular = std::numeric_limits<double>::infinity();
        res.s_star = 0.5 * (res.s_regular + kThresholdSMax);
        res.band_narrow = false;
        return res;
    }
    while (dhi - dlo > 1) {
        const int mid = (dlo + dhi) / 2;
        (verdict_at(mid) == Verdict::divergent ? dhi : dlo) = mid;
    }
    res.s_singular = kThresholdSMin + dhi * kThresholdStep;
    res.s_star = 0.5 * (res.s_regular + res.s_singular);
    res.band_narrow = (res.s_singular - res.s_regular) <= 2.0 * kThresholdStep + 1e-12;
    return res;
}

struct WavefrontDirectionRow {
    std::array<double, kMaxDim> dir{1, 0, 0};
    double angle_deg{0.0};  // d = 2 convenience
    std::vector<Verdict> verdicts;  // one per s-grid entry
    PartialSumTrace trace;          // trace at the primary (first) s
    double s_star{std::numeric_limits<double>::quiet_NaN()};  // filled on request
};

struct WavefrontArc {
    double center_deg{0.0};
    double half_width_deg{0.0};
};

struct WavefrontReport {
    int dim{2};
    std::array<double, kMaxDim> x0{0, 0, 0};
    std::vector<double> s_grid;
    double theta_deg{20.0};
    std::vector<WavefrontDirectionRow> rows;
    std::vector<WavefrontArc> nonregular_arcs;  // at the primary s
};

namespace detail {

// Union of circular intervals [a_i - t, a_i + t] (degrees), merged.
inline std::vector<WavefrontArc> merge_arcs(std::vector<double> centers, double t) {
    std::vector<WavefrontArc> out;
    if (centers.empty()) return out;
    std::sort(centers.begin(), centers.end());
    std::vector<std::pair<double, double>> iv;
    for (double c : centers) iv.emplace_back(c - t, c + t);
    // Merge on the line, then check the wrap between last and first.
    std::vector<std::pair<double, double>> merged{iv.front()};
    for (std::size_t i = 1; i < iv.size(); ++i) {
        if (iv[i].first <= merged.back().second + 1e-12)
            merged.back().second = std::max(merged.back().second, iv[i].second);
        else
            merged.push_back(iv[i]);
    }
    if (merged.size() > 1 && merged.front().first + 360.0 <= merged.back().second + 1e-12) {
        merged.front().first = merged.back().first - 360.0;
        merged.pop_back();
    }
    for (const auto& [a, b] : merged) out.push_back({0.5 * (a + b), 0.5 * (b - a)});
    return out;
}

}  // namespace detail

/// Scans a uniform direction grid at every s in s_grid and reports the
/// union of apertures covering the non-regular directions at the first
/// (primary) s: a candidate cone family for the product hypotheses.
inline WavefrontReport wavefront_scan(const CoefficientField& f,
                                      const std::array<double, kMaxDim>& x0,
                                      const std::vector<double>& s_grid, int n_directions,
                                      double theta_deg, const LocalizationWindow& window,
                                      int radius, bool with_thresholds = false) {
    if (s_grid.empty()) throw std::invalid_argument("wavefront_scan: need at least one s");
    if (f.dim() >= 2 && n_directions < 8)
        throw std::invalid_argument("wavefront_scan: need at least 8 directions");
    const CoefficientField loc = localize_at(f, x0, window, radius);

    WavefrontReport rep;
    rep.dim = f.dim();
    rep.x0 = x0;
    rep.s_grid = s_grid;
    rep.theta_deg = theta_deg;

    const auto dirs = uniform_directions(f.dim(), n_directions);
    std::vector<double> bad_angles;
    for (const auto& u : dirs) {
        WavefrontDirectionRow row;
        row.dir = u;
        row.angle_deg = std::atan2(u[1], u[0]) * 180.0 / M_PI;
        for (std::size_t i = 0; i < s_grid.size(); ++i) {
            auto r = regularity_from_localized(loc, u, s_grid[i], theta_deg);
            row.verdicts.push_back(r.verdict);
            if (i == 0) {
                row.trace = r.trace;
                if (r.verdict != Verdict::convergent) bad_angles.push_back(row.angle_deg);
            }
        }
        rep.rows.push_back(std::move(row));
    }
    if (f.dim() == 2) rep.nonregular_arcs = detail::merge_arcs(bad_angles, theta_deg);
    if (with_thresholds) {
        for (auto& row : rep.rows)
            row.s_star = sobolev_threshold(f, x0, row.dir, theta_deg, window, radius).s_star;
    }
    return rep;
}

/// Theorem-5.4 content: a globally cone-regular field stays cone-regular
/// after localization. Requires the global trace over Gamma at exponent s
/// to classify convergent and Gamma1 to sit strictly inside Gamma.
inline bool converse_regularity_check(const CoefficientField& a, const LatticeCone& gamma,
                                      double s, const LatticeCone& gamma1,
                                      const LocalizationWindow& window,
                                      const std::array<double, kMaxDim>& x0) {
    if (a.dim() != gamma.dim() || a.dim() != gamma1.dim())
        throw std::invalid_argument("converse_regularity_check: dimension mismatch");
    for (const auto& e : detail::closure_edge_rays(gamma1))
        if (!detail::strictly_inside(gamma, e))
            throw std::invalid_argument(
                "converse_regularity_check: Gamma1 must be compactly contained in Gamma");
    const auto radii = dyadic_radii(a.radius(), 4);
    const auto pre = cone_sum(a, gamma, s, radii, false);
    if (pre.verdict != Verdict::convergent)
        throw std::invalid_argument(
            "converse_regularity_check: precondition trace is not convergent (verdict " +
            std::string(to_string(pre.verdict)) + ")");
    const CoefficientField loc = localize_at(a, x0, window, a.radius());
    return cone_sum(loc, gamma1, s, radii, false).verdict == Verdict::convergent;
}

}  // namespace perdist
