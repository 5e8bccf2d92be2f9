// trace.hpp
// Partial-sum traces: the finite surrogate for the paper-style assertions
// "sum < +infinity". A trace records cumulative weighted sums at increasing
// radii and classifies them as convergent / divergent / inconclusive.
//
// Decision rule (fixed for the whole artifact):
//   sigma  = least-squares slope of log S(R_j) against log R_j
//            over the entries with S(R_j) > 0;
//   ratio  = S(R_max) / S(R_half) - 1, R_half = largest radius <= R_max/2;
//   convergent    iff ratio < 0.05 and sigma < 0.05,
//   divergent     iff sigma > 0.2,
//   inconclusive  otherwise.
// An identically-zero trace is convergent with slope 0.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace perdist {

enum class Verdict { convergent, divergent, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::convergent: return "convergent";
        case Verdict::divergent: return "divergent";
        default: return "inconclusive";
    }
}

constexpr double kConvergentTailRatio = 0.05;
constexpr double kConvergentSlopeMax = 0.05;
constexpr double kDivergentSlopeMin = 0.20;

// Least-squares slope of y against x. Returns 0 for fewer than two points.
inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) return 0.0;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx > 0 ? sxy / sxx : 0.0;
}

struct PartialSumTrace {
    std::vector<int> radii;    // strictly increasing
    std::vector<double> sums;  // cumulative, non-decreasing
    double slope{0.0};         // fitted log-log tail exponent
    Verdict verdict{Verdict::inconclusive};
};

inline void validate_radii(const std::vector<int>& radii) {
    if (radii.size() < 2) throw std::invalid_argument("trace: need at least two radii");
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (radii[i] >= radii[i + 1]) throw std::invalid_argument("trace: radii must be strictly increasing");
    if (radii.front() < 1) throw std::invalid_argument("trace: radii must be >= 1");
    if (radii.back() < 2 * radii.front())
        throw std::invalid_argument("trace: largest radius must be at least twice the smallest");
}

/// Classifies cumulative sums at the given radii; fills slope and verdict.
inline PartialSumTrace classify_partial_sums(std::vector<int> radii, std::vector<double> sums) {
    validate_radii(radii);
    if (sums.size() != radii.size()) throw std::invalid_argument("trace: radii/sums size mismatch");
    PartialSumTrace t;
    t.radii = std::move(radii);
    t.sums = std::move(sums);

    const double s_max = t.sums.back();
    if (s_max == 0.0) {
        t.slope = 0.0;
        t.verdict = Verdict::convergent;
        return t;
    }

    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t.radii.size(); ++i) {
        if (t.sums[i] > 0.0) {
            lx.push_back(std::log(static_cast<double>(t.radii[i])));
            ly.push_back(std::log(t.sums[i]));
        }
    }
    t.slope = least_squares_slope(lx, ly);

    // Tail increment ratio against the largest radius <= R_max/2.
    double s_half = -1.0;
    for (std::size_t i = 0; i + 1 < t.radii.size(); ++i)
        if (2 * t.radii[i] <= t.radii.back()) s_half = t.sums[i];
    double ratio = std::numeric_limits<double>::infinity();
    if (s_half > 0.0) ratio = s_max / s_half - 1.0;

    if (ratio < kConvergentTailRatio && t.slope < kConvergentSlopeMax)
        t.verdict = Verdict::convergent;
    else if (t.slope > kDivergentSlopeMin)
        t.verdict = Verdict::divergent;
    else
        t.verdict = Verdict::inconclusive;
    return t;
}

// Dyadic radii n_max, n_max/2, ..., down to at least max(4, n_max/16),
// in increasing order. The usual default for traces over a radius-n field.
inline std::vector<int> dyadic_radii(int n_max, int levels = 5) {
    if (n_max < 8) throw std::invalid_argument("dyadic_radii: need n_max >= 8");
    std::vector<int> r;
    int v = n_max;
    for (int i = 0; i < levels && v >= 4; ++i) {
        r.push_back(v);
        v /= 2;
    }
    std::vector<int> out(r.rbegin(), r.rend());
    return out;
}

}  // namespace perdist
