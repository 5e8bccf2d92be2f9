// oracles.hpp
// Independent reference computations used to freeze expected test values.
// Everything here is deliberately naive: composite Gauss-Legendre
// quadrature, direct DFT sums, double loops, and full-box enumeration.
// None of it shares code with the implementation paths under test.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "perdist/cones.hpp"
#include "perdist/field.hpp"
#include "perdist/lattice.hpp"

namespace perdist::oracles {

// 8-point Gauss-Legendre nodes/weights on [-1,1].
inline const std::array<double, 8>& gl_nodes() {
    static const std::array<double, 8> n = {
        -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
        0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    return n;
}
inline const std::array<double, 8>& gl_weights() {
    static const std::array<double, 8> w = {
        0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
        0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    return w;
}

// Composite 8-point Gauss-Legendre integral of a complex integrand over
// [a,b] with `panels` subintervals.
inline std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, int panels = 64) {
    std::complex<double> acc{0.0, 0.0};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        for (int q = 0; q < 8; ++q) {
            const double x = lo + 0.5 * h * (gl_nodes()[q] + 1.0);
            acc += gl_weights()[q] * f(x);
        }
    }
    return acc * (0.5 * h);
}

// Fourier coefficient int_0^1 f(x) e^{-2 pi i n x} dx by composite
// quadrature on smoothness subintervals (breakpoints where f jumps).
inline std::complex<double> fourier_coefficient_1d(const std::function<double(double)>& f, int n,
                                                   const std::vector<double>& breakpoints = {0.0,
                                                                                             1.0},
                                                   int panels_per_piece = 48) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        acc += integrate(
            [&](double x) {
                const double ph = -2.0 * M_PI * n * x;
                return f(x) * std::complex<double>(std::cos(ph), std::sin(ph));
            },
            breakpoints[i], breakpoints[i + 1], panels_per_piece);
    }
    return acc;
}

// Direct (no FFT) evaluation of sum a_k e_k at torus point x.
inline std::complex<double> eval_partial_sum(const CoefficientField& a,
                                             const std::array<double, kMaxDim>& x) {
    std::complex<double> acc{0.0, 0.0};
    a.for_each([&](const MultiIndex& k, const Complex& v) {
        if (v == Complex{0.0, 0.0}) return;
        double ph = 0.0;
        for (int i = 0; i < a.dim(); ++i) ph += k.c[i] * x[i];
        ph *= 2.0 * M_PI;
        acc += v * std::complex<double>(std::cos(ph), std::sin(ph));
    });
    return acc;
}

// Quadrature coefficients of the pointwise product of the partial sums of
// two 1D fields: rectangle rule on an exact grid (the product is a
// trigonometric polynomial of degree N1+N2, so M > 2(N1+N2) is exact).
inline CoefficientField product_coefficients_by_quadrature_1d(const CoefficientField& f1,
                                                              const CoefficientField& f2) {
    const int n_out = f1.radius() + f2.radius();
    const int m = 2 * (2 * n_out + 1);
    std::vector<std::complex<double>> vals(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const std::array<double, kMaxDim> x{static_cast<double>(j) / m, 0, 0};
        vals[static_cast<std::size_t>(j)] = eval_partial_sum(f1, x) * eval_partial_sum(f2, x);
    }
    CoefficientField out(1, n_out);
    for (int k = -n_out; k <= n_out; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < m; ++j) {
            const double ph = -2.0 * M_PI * k * j / m;
            acc += vals[static_cast<std::size_t>(j)] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        out.at(MultiIndex(1, k)) = acc / static_cast<double>(m);
    }
    return out;
}

// Full-box brute-force count of { k : k in c2, n-k in c1 } over
// |k|_inf <= 4 |n|_inf + 8.
inline long long brute_force_count(const LatticeCone& c1, const LatticeCone& c2,
                                   const MultiIndex& n) {
    int r = 8;
    for (int i = 0; i < n.dim; ++i) r = std::max(r, 4 * std::abs(n.c[i]) + 8);
    long long count = 0;
    MultiIndex k(n.dim, 0);
    const int d = n.dim;
    for (int x = -r; x <= r; ++x) {
        k.c[0] = x;
        if (d == 1) {
            if (c2.contains(k) && c1.contains(n - k)) ++count;
            continue;
        }
        for (int y = -r; y <= r; ++y) {
            k.c[1] = y;
            if (d == 2) {
                if (c2.contains(k) && c1.contains(n - k)) ++count;
                continue;
            }
            for (int z = -r; z <= r; ++z) {
                k.c[2] = z;
                if (c2.contains(k) && c1.contains(n - k)) ++count;
            }
        }
    }
    return count;
}

}  // namespace perdist::oracles
