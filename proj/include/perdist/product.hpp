// product.hpp
// Coefficient-side products of periodic distributions: the Cauchy product
// f_n = sum_j f_{1,n-j} f_{2,j} by direct summation and by zero-padded
// spectral convolution, the order bookkeeping
//   2 tau >= max{4 gamma (a1+a2) + 2 gamma + d + 1, 2 a1 + d + 1, 2 a2 + d + 1},
// and the Sobolev exponent rule s <= min{s1,s2} for s1+s2 >= 0.
//
// The direct path sums mirror pairs (j, n-j) together in a canonical
// order, which makes cauchy_product_direct(f1,f2) == cauchy_product_direct(f2,f1)
// bitwise, not merely up to rounding.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "perdist/fft.hpp"
#include "perdist/field.hpp"
#include "perdist/lattice.hpp"
#include "perdist/trace.hpp"

namespace perdist {

namespace detail {

inline CoefficientField pad_to_radius(const CoefficientField& f, int radius) {
    if (f.radius() == radius) return f;
    CoefficientField out(f.dim(), radius);
    f.for_each([&](const MultiIndex& k, const Complex& v) { out.at(k) = v; });
    return out;
}

// Lexicographic comparison of box indices.
inline int lex_compare(const MultiIndex& a, const MultiIndex& b) {
    for (int i = 0; i < a.dim; ++i) {
        if (a.c[i] < b.c[i]) return -1;
        if (a.c[i] > b.c[i]) return 1;
    }
    return 0;
}

}  // namespace detail

/// Cauchy product by direct summation; output radius N1 + N2.
inline CoefficientField cauchy_product_direct(const CoefficientField& f1,
                                              const CoefficientField& f2) {
    if (f1.dim() != f2.dim())
        throw std::invalid_argument("cauchy_product_direct: dimension mismatch");
    const int d = f1.dim();
    const int n_out = f1.radius() + f2.radius();
    const int m = std::max(f1.radius(), f2.radius());
    const CoefficientField a = detail::pad_to_radius(f1, m);
    const CoefficientField b = detail::pad_to_radius(f2, m);

    CoefficientField out(d, n_out);
    out.for_each([&](const MultiIndex& n, const Complex&) {
        // j runs over box(m) cap (n - box(m)); the range is mirror
        // symmetric under j <-> n - j, so sum each mirror pair at once.
        std::array<int, kMaxDim> lo{0, 0, 0}, hi{0, 0, 0};
        for (int i = 0; i < d; ++i) {
            lo[i] = std::max(-m, n.c[i] - m);
            hi[i] = std::min(m, n.c[i] + m);
            if (lo[i] > hi[i]) return;
        }
        Complex acc{0.0, 0.0};
        MultiIndex j(d, lo[0]);
        for (int i = 1; i < d; ++i) j.c[i] = lo[i];
        while (true) {
            const MultiIndex mirror = n - j;
            const int cmp = detail::lex_compare(j, mirror);
            if (cmp < 0)
                acc += a.at(mirror) * b.at(j) + a.at(j) * b.at(mirror);
            else if (cmp == 0)
                acc += a.at(j) * b.at(j);
            // advance odometer
            int axis = d - 1;
            while (axis >= 0) {
                if (++j.c[axis] <= hi[axis]) break;
                j.c[axis] = lo[axis];
                --axis;
            }
            if (axis < 0) break;
        }
        out.at(n) = acc;
    });
    return out;
}

/// Cauchy product by zero-padded spectral convolution; identical contract
/// to the direct path.
inline CoefficientField cauchy_product_fft(const CoefficientField& f1,
                                           const CoefficientField& f2) {
    if (f1.dim() != f2.dim()) throw std::invalid_argument("cauchy_product_fft: dimension mismatch");
    const int d = f1.dim();
    const int n_out = f1.radius() + f2.radius();
    const int side = 2 * n_out + 1;  // exact linear-convolution length
    std::array<int, 3> shape{1, 1, 1};
    for (int i = 0; i < d; ++i) shape[static_cast<std::size_t>(i)] = side;
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(side);

    auto embed = [&](const CoefficientField& f) {
        std::vector<Complex> buf(total, Complex{0.0, 0.0});
        f.for_each([&](const MultiIndex& k, const Complex& v) {
            std::size_t idx = 0;
            for (int i = 0; i < d; ++i)
                idx = idx * static_cast<std::size_t>(side) +
                      static_cast<std::size_t>(k.c[i] + f.radius());
            buf[idx] = v;
        });
        return buf;
    };

    std::vector<Complex> ga = embed(f1), gb = embed(f2);
    fft_forward(d, shape, ga);
    fft_forward(d, shape, gb);
    for (std::size_t i = 0; i < total; ++i) ga[i] *= gb[i];
    fft_inverse(d, shape, ga);
    const double scale = 1.0 / static_cast<double>(total);

    CoefficientField out(d, n_out);
    out.for_each([&](const MultiIndex& n, const Complex&) {
        std::size_t idx = 0;
        for (int i = 0; i < d; ++i)
            idx = idx * static_cast<std::size_t>(side) + static_cast<std::size_t>(n.c[i] + n_out);
        out.at(n) = ga[idx] * scale;
    });
    return out;
}

/// Minimal tau with 2 tau >= max{4 gamma (a1+a2) + 2 gamma + d + 1,
/// 2 a1 + d + 1, 2 a2 + d + 1}; validates the compatibility hypotheses.
inline double product_order_bound(double alpha1, double alpha2, double beta1, double beta2,
                                  double gamma, int d) {
    if (!(alpha1 >= 0)) throw std::invalid_argument("product_order_bound: hypothesis alpha1 >= 0 fails");
    if (!(alpha2 >= 0)) throw std::invalid_argument("product_order_bound: hypothesis alpha2 >= 0 fails");
    if (!(beta1 >= alpha2))
        throw std::invalid_argument("product_order_bound: hypothesis beta1 >= alpha2 fails");
    if (!(beta2 >= alpha1))
        throw std::invalid_argument("product_order_bound: hypothesis beta2 >= alpha1 fails");
    if (!(gamma >= 1)) throw std::invalid_argument("product_order_bound: hypothesis gamma >= 1 fails");
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("product_order_bound: d must be 1, 2, or 3");
    const double t1 = 4.0 * gamma * (alpha1 + alpha2) + 2.0 * gamma + d + 1;
    const double t2 = 2.0 * alpha1 + d + 1;
    const double t3 = 2.0 * alpha2 + d + 1;
    return std::max({t1, t2, t3}) / 2.0;
}

/// Largest admissible Sobolev exponent of the product: min{s1, s2},
/// requiring s1 + s2 >= 0.
inline double sobolev_product_exponent(double s1, double s2) {
    if (!(s1 + s2 >= 0))
        throw std::invalid_argument("sobolev_product_exponent: s1 + s2 >= 0 is required");
    return std::min(s1, s2);
}

/// Partial sums sum_{|j| <= r} |f_{1,n-j}| |f_{2,j}| of the defining
/// convolution series at a fixed output index n: traces whether the
/// coefficient series itself converges as the truncation grows (the
/// comb x comb divergence shows up here).
inline PartialSumTrace convolution_series_trace(const CoefficientField& f1,
                                                const CoefficientField& f2, const MultiIndex& n,
                                                const std::vector<int>& radii) {
    if (f1.dim() != f2.dim() || f1.dim() != n.dim)
        throw std::invalid_argument("convolution_series_trace: dimension mismatch");
    validate_radii(radii);
    std::vector<double> sums(radii.size(), 0.0);
    f2.for_each([&](const MultiIndex& j, const Complex& v) {
        const Complex w = f1.coeff_or_zero(n - j);
        const double term = std::abs(v) * std::abs(w);
        if (term == 0.0) return;
        const std::int64_t r2 = j.norm2();
        for (std::size_t i = 0; i < radii.size(); ++i)
            if (r2 <= static_cast<std::int64_t>(radii[i]) * radii[i]) {
                sums[i] += term;
                break;
            }
    });
    for (std::size_t i = 1; i < sums.size(); ++i) sums[i] += sums[i - 1];
    return classify_partial_sums(radii, sums);
}

}  // namespace perdist
