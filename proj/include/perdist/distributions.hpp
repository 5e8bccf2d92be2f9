// distributions.hpp
// Truncated-field representations of periodic distributions: grid
// synthesis of partial sums, periodized localization (f psi)_per by FFT
// quadrature, and estimation of the distributional order k0.

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "perdist/closed_forms.hpp"
#include "perdist/compat.hpp"
#include "perdist/fft.hpp"
#include "perdist/field.hpp"
#include "perdist/trace.hpp"
#include "perdist/window.hpp"

namespace perdist {

/// Evaluates the partial sum sum a_n e_n on the uniform M-grid of the
/// torus (exact for the stored band; requires M > 2N).
inline TorusGrid synthesize_partial_sum(const CoefficientField& a, int m_grid) {
    if (m_grid < 2 * a.radius() + 1)
        throw std::invalid_argument("synthesize_partial_sum: grid must satisfy M > 2N");
    TorusGrid g(a.dim(), m_grid);
    a.for_each([&](const MultiIndex& k, const Complex& v) {
        if (v == Complex{0.0, 0.0}) return;
        std::array<int, kMaxDim> j{0, 0, 0};
        for (int i = 0; i < a.dim(); ++i) j[i] = k.c[i];
        g.at(j) += v;
    });
    std::array<int, 3> shape{1, 1, 1};
    for (int i = 0; i < a.dim(); ++i) shape[static_cast<std::size_t>(i)] = m_grid;
    // Unnormalized inverse transform is exactly sum_n a_n e^{2 pi i <n,j>/M}.
    fft_inverse(a.dim(), shape, g.values);
    return g;
}

/// Samples a callable f(x), x in [0,1)^d, on the uniform M-grid.
template <class F>
inline TorusGrid sample_on_torus(int dim, int m_grid, F&& f) {
    TorusGrid g(dim, m_grid);
    std::array<int, kMaxDim> j{0, 0, 0};
    std::size_t flat = 0;
    std::array<double, kMaxDim> x{0, 0, 0};
    if (dim == 1) {
        for (j[0] = 0; j[0] < m_grid; ++j[0], ++flat) {
            x[0] = static_cast<double>(j[0]) / m_grid;
            g.values[flat] = f(x);
        }
    } else if (dim == 2) {
        for (j[0] = 0; j[0] < m_grid; ++j[0])
            for (j[1] = 0; j[1] < m_grid; ++j[1], ++flat) {
                x[0] = static_cast<double>(j[0]) / m_grid;
                x[1] = static_cast<double>(j[1]) / m_grid;
                g.values[flat] = f(x);
            }
    } else {
        for (j[0] = 0; j[0] < m_grid; ++j[0])
            for (j[1] = 0; j[1] < m_grid; ++j[1])
                for (j[2] = 0; j[2] < m_grid; ++j[2], ++flat) {
                    x[0] = static_cast<double>(j[0]) / m_grid;
                    x[1] = static_cast<double>(j[1]) / m_grid;
                    x[2] = static_cast<double>(j[2]) / m_grid;
                    g.values[flat] = f(x);
                }
    }
    return g;
}

/// Coefficients a_k = int (f psi) e_{-k} of the periodized localization,
/// by FFT quadrature on the sample grid. Requires the oversampling
/// M >= 4N; exact for band-limited f up to the quadrature error of the
/// window smoothness.
inline CoefficientField periodize_localized(const TorusGrid& f, const LocalizationWindow& w,
                                            int radius) {
    if (f.dim != w.dim) throw std::invalid_argument("periodize_localized: dimension mismatch");
    if (radius < 1) throw std::invalid_argument("periodize_localized: radius must be >= 1");
    if (f.m < 4 * radius)
        throw std::invalid_argument("periodize_localized: undersampled grid (need M >= 4N)");
    TorusGrid g = apply_window(f, w);
    std::array<int, 3> shape{1, 1, 1};
    for (int i = 0; i < f.dim; ++i) shape[static_cast<std::size_t>(i)] = f.m;
    fft_forward(f.dim, shape, g.values);
    const double scale = 1.0 / static_cast<double>(g.size());
    CoefficientField out(f.dim, radius);
    out.for_each([&](const MultiIndex& k, const Complex&) {
        std::array<int, kMaxDim> j{0, 0, 0};
        for (int i = 0; i < f.dim; ++i) j[i] = k.c[i];
        out.at(k) = g.at(j) * scale;
    });
    return out;
}

/// Convenience overload: synthesize the stored band of a coefficient
/// field, then localize.
inline CoefficientField periodize_localized(const CoefficientField& a, const LocalizationWindow& w,
                                            int radius, int m_grid) {
    return periodize_localized(synthesize_partial_sum(a, m_grid), w, radius);
}

struct OrderEstimate {
    bool conclusive{false};
    double k0{0.0};
    PartialSumTrace trace;  // trace at the returned k0 (or at the grid top when inconclusive)
};

/// Smallest k0 on the quarter-step grid [0,12] whose trace
/// sum |a_n|^2 <n>^{-2 k0} classifies convergent.
inline OrderEstimate order_estimate(const CoefficientField& a, const std::vector<int>& radii) {
    if (radii.size() < 4) throw std::invalid_argument("order_estimate: need at least 4 radii");
    OrderEstimate est;
    for (double k0 = 0.0; k0 <= kExponentGridMax + 1e-9; k0 += kExponentGridStep) {
        est.trace = weighted_trace(a, -k0, radii);
        if (est.trace.verdict == Verdict::convergent) {
            est.k0 = k0;
            est.conclusive = true;
            return est;
        }
    }
    est.k0 = kExponentGridMax;
    est.conclusive = false;
    return est;
}

}  // namespace perdist
