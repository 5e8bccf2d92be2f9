// window.hpp
// Compactly supported localization windows psi on the torus: psi == 1 on
// the plateau box T_{eps,x0}, supp psi inside T_{eta,x0}, 0 <= psi <= 1.
//
// Construction: the 1D profile is the convolution of a box indicator with
// an m-fold box-convolution kernel (an iterated B-spline bump), rescaled
// so the plateau has width eps and the support width eta. This keeps the
// support exactly compact, makes the smoothness order m adjustable, and
// gives closed-form Fourier coefficients
//   psi_hat(k) = sin(2 pi c k)/(pi k) * [sin(2 pi w k / m)/(2 pi w k / m)]^m,
// with c = (eta+eps)/4 and w = (eta-eps)/4, used for cross-checks.
// Multi-dimensional windows are tensor products of the 1D profile.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "perdist/field.hpp"
#include "perdist/lattice.hpp"

namespace perdist {

namespace detail {

// Cardinal B-spline M_p on knots 0..p (Cox-de Boor, stable for p <= 16).
inline double cardinal_bspline(int p, double x) {
    if (x <= 0.0 || x >= p) return 0.0;
    const int j0 = static_cast<int>(std::floor(x));
    // N_{j,1} = [j <= x < j+1]; iterate order upward keeping the active span.
    std::array<double, 18> n{};
    n[0] = 1.0;  // N_{j0,1}
    for (int k = 2; k <= p; ++k) {
        // After this pass n[i] = N_{j0-i, k}(x) for i = 0..k-1.
        for (int i = k - 1; i >= 0; --i) {
            const int j = j0 - i;
            const double left = (i == k - 1) ? 0.0 : n[i] * (x - j);
            const double right = (i == 0) ? 0.0 : n[i - 1] * (j + k - x);
            double v = (left + right) / (k - 1);
            if (j < 0 || j > p - k) v = 0.0;
            n[i] = v;
        }
    }
    return n[static_cast<std::size_t>(j0)];  // N_{0,p}(x)
}

// CDF of the cardinal B-spline: G_p(x) = int_0^x M_p, via the telescoping
// identity G_p(x) = sum_j M_{p+1}(x - j).
inline double cardinal_bspline_cdf(int p, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= p) return 1.0;
    double s = 0.0;
    for (int j = 0; j <= static_cast<int>(std::floor(x)); ++j) s += cardinal_bspline(p + 1, x - j);
    return s;
}

}  // namespace detail

struct LocalizationWindow {
    int dim{1};
    std::array<double, kMaxDim> center{0, 0, 0};  // x0, torus coordinates
    double eta{0.5};                              // support width, in (0,1]
    double eps{0.25};                             // plateau width, in (0,eta)
    int smoothness{4};                            // m >= 2

    LocalizationWindow() = default;
    LocalizationWindow(int d, std::array<double, kMaxDim> x0, double eta_, double eps_, int m)
        : dim(d), center(x0), eta(eta_), eps(eps_), smoothness(m) {
        if (d < 1 || d > kMaxDim) throw std::invalid_argument("LocalizationWindow: dim must be 1..3");
        if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("LocalizationWindow: eta in (0,1]");
        const bool unit = (eta == 1.0 && eps == 1.0);
        if (!unit && !(eps > 0.0 && eps < eta))
            throw std::invalid_argument("LocalizationWindow: eps in (0,eta), or eps=eta=1 for the unit window");
        if (m < 2) throw std::invalid_argument("LocalizationWindow: smoothness m >= 2");
    }

    // psi == 1 identically (eta = eps = 1): periodization of the full cell.
    bool is_unit() const { return eta == 1.0 && eps == 1.0; }

    double half_support() const { return eta / 2.0; }
    double half_plateau() const { return eps / 2.0; }

    /// Centered 1D profile at offset t (no torus wrap).
    double profile(double t) const {
        if (is_unit()) return 1.0;
        const double a = std::abs(t);
        if (a <= half_plateau()) return 1.0;
        if (a >= half_support()) return 0.0;
        const double width = half_support() - half_plateau();
        const double u = (a - half_plateau()) / width;  // in (0,1)
        return 1.0 - detail::cardinal_bspline_cdf(smoothness, smoothness * u);
    }

    /// Window value at torus point x (wraps each coordinate to the cell
    /// centered at x0).
    double value(const std::array<double, kMaxDim>& x) const {
        double v = 1.0;
        for (int i = 0; i < dim; ++i) {
            double t = x[i] - center[i];
            t -= std::round(t);
            v *= profile(t);
        }
        return v;
    }

    /// Closed-form Fourier coefficient of the centered 1D profile.
    double coeff1d(int k) const {
        if (is_unit()) return k == 0 ? 1.0 : 0.0;
        const double c = (eta + eps) / 4.0;
        const double w = (eta - eps) / 4.0;
        if (k == 0) return 2.0 * c;
        const double box = std::sin(2.0 * M_PI * c * k) / (M_PI * k);
        const double arg = 2.0 * M_PI * w * k / smoothness;
        const double kernel = std::pow(std::sin(arg) / arg, smoothness);
        return box * kernel;
    }

    /// Fourier coefficient of the full window (tensor product, with the
    /// e^{-2 pi i <k,x0>} phase of the center shift).
    Complex coeff(const MultiIndex& k) const {
        if (k.dim != dim) throw std::invalid_argument("LocalizationWindow::coeff: dimension mismatch");
        double mag = 1.0, phase = 0.0;
        for (int i = 0; i < dim; ++i) {
            mag *= coeff1d(k.c[i]);
            phase -= 2.0 * M_PI * k.c[i] * center[i];
        }
        return std::polar(mag, phase);
    }

    // integral of psi over the cell: (2c)^d = ((eta+eps)/2)^d.
    double integral() const {
        if (is_unit()) return 1.0;
        double v = 1.0;
        for (int i = 0; i < dim; ++i) v *= (eta + eps) / 2.0;
        return v;
    }

    /// Samples of the profile along axis `axis` on the M-point torus grid.
    std::vector<double> axis_samples(int axis, int m_grid) const {
        std::vector<double> out(static_cast<std::size_t>(m_grid));
        for (int j = 0; j < m_grid; ++j) {
            double t = static_cast<double>(j) / m_grid - center[axis];
            t -= std::round(t);
            out[static_cast<std::size_t>(j)] = profile(t);
        }
        return out;
    }

    LocalizationWindow recentred(const std::array<double, kMaxDim>& x0) const {
        LocalizationWindow w = *this;
        w.center = x0;
        return w;
    }
};

/// Multiplies torus-grid samples pointwise by the window.
inline TorusGrid apply_window(const TorusGrid& f, const LocalizationWindow& w) {
    if (f.dim != w.dim) throw std::invalid_argument("apply_window: dimension mismatch");
    std::array<std::vector<double>, kMaxDim> axis;
    for (int i = 0; i < f.dim; ++i) axis[static_cast<std::size_t>(i)] = w.axis_samples(i, f.m);
    TorusGrid out(f.dim, f.m);
    std::array<int, kMaxDim> j{0, 0, 0};
    const int m = f.m;
    std::size_t flat = 0;
    if (f.dim == 1) {
        for (j[0] = 0; j[0] < m; ++j[0], ++flat) out.values[flat] = f.values[flat] * axis[0][j[0]];
    } else if (f.dim == 2) {
        for (j[0] = 0; j[0] < m; ++j[0])
            for (j[1] = 0; j[1] < m; ++j[1], ++flat)
                out.values[flat] = f.values[flat] * (axis[0][j[0]] * axis[1][j[1]]);
    } else {
        for (j[0] = 0; j[0] < m; ++j[0])
            for (j[1] = 0; j[1] < m; ++j[1])
                for (j[2] = 0; j[2] < m; ++j[2], ++flat)
                    out.values[flat] = f.values[flat] * (axis[0][j[0]] * axis[1][j[1]] * axis[2][j[2]]);
    }
    return out;
}

}  // namespace perdist
