// shiftinv.hpp
// Finite-truncation shift-invariant space layer: sampled generators,
// frame synthesis f = sum_i sum_k c^i_k phi^i(. + k), the fiberization
// map phi -> (psi_hat(t+k)/<k>^s)_k with psi_hat = <.>^s phi_hat (an
// isometry onto the discrete H(T, l^2_s)), the Wiener amalgam norm, and
// the convolution product whose generators are grid convolutions and
// whose coefficients are Cauchy products.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perdist/compat.hpp"
#include "perdist/fft.hpp"
#include "perdist/field.hpp"
#include "perdist/product.hpp"
#include "perdist/window.hpp"

namespace perdist {

namespace detail {

inline std::size_t span_size(int dim, const std::array<int, kMaxDim>& lo,
                             const std::array<int, kMaxDim>& hi) {
    std::size_t n = 1;
    for (int i = 0; i < dim; ++i) {
        if (hi[i] < lo[i]) throw std::invalid_argument("sample span: hi < lo");
        n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    }
    return n;
}

// Odometer over [lo, hi]; f receives the running multi-position.
template <class F>
inline void for_each_in_span(int dim, const std::array<int, kMaxDim>& lo,
                             const std::array<int, kMaxDim>& hi, F&& f) {
    std::array<int, kMaxDim> n = lo;
    while (true) {
        f(n);
        int axis = dim - 1;
        while (axis >= 0) {
            if (++n[axis] <= hi[axis]) break;
            n[axis] = lo[axis];
            --axis;
        }
        if (axis < 0) break;
    }
}

}  // namespace detail

// Real-valued generator sampled at step 1/m on the index span [lo, hi]
// (sample n corresponds to the point n/m).
struct SampledGenerator {
    int dim{1};
    int m{64};  // samples per unit cell, >= 16
    std::array<int, kMaxDim> lo{0, 0, 0};
    std::array<int, kMaxDim> hi{0, 0, 0};
    std::vector<double> values;
    double smoothness{0.0};
    std::string label;

    SampledGenerator() = default;
    SampledGenerator(int d, int m_, std::array<int, kMaxDim> lo_, std::array<int, kMaxDim> hi_,
                     std::string label_ = "", double s = 0.0)
        : dim(d), m(m_), lo(lo_), hi(hi_), smoothness(s), label(std::move(label_)) {
        if (d < 1 || d > kMaxDim) throw std::invalid_argument("SampledGenerator: dim must be 1..3");
        if (m_ < 16) throw std::invalid_argument("SampledGenerator: need at least 16 samples per unit");
        values.assign(detail::span_size(d, lo, hi), 0.0);
    }

    std::size_t flat(const std::array<int, kMaxDim>& n) const {
        std::size_t idx = 0;
        for (int i = 0; i < dim; ++i)
            idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) +
                  static_cast<std::size_t>(n[i] - lo[i]);
        return idx;
    }

    bool in_span(const std::array<int, kMaxDim>& n) const {
        for (int i = 0; i < dim; ++i)
            if (n[i] < lo[i] || n[i] > hi[i]) return false;
        return true;
    }

    double at(const std::array<int, kMaxDim>& n) const {
        return in_span(n) ? values[flat(n)] : 0.0;
    }
    double& ref(const std::array<int, kMaxDim>& n) { return values[flat(n)]; }
};

// Complex sampled function on the same kind of grid (synthesis output).
struct SampledFunction {
    int dim{1};
    int m{64};
    std::array<int, kMaxDim> lo{0, 0, 0};
    std::array<int, kMaxDim> hi{0, 0, 0};
    std::vector<Complex> values;

    SampledFunction() = default;
    SampledFunction(int d, int m_, std::array<int, kMaxDim> lo_, std::array<int, kMaxDim> hi_)
        : dim(d), m(m_), lo(lo_), hi(hi_) {
        values.assign(detail::span_size(d, lo, hi), Complex{0.0, 0.0});
    }

    std::size_t flat(const std::array<int, kMaxDim>& n) const {
        std::size_t idx = 0;
        for (int i = 0; i < dim; ++i)
            idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) +
                  static_cast<std::size_t>(n[i] - lo[i]);
        return idx;
    }
    bool in_span(const std::array<int, kMaxDim>& n) const {
        for (int i = 0; i < dim; ++i)
            if (n[i] < lo[i] || n[i] > hi[i]) return false;
        return true;
    }
    Complex at(const std::array<int, kMaxDim>& n) const {
        return in_span(n) ? values[flat(n)] : Complex{0.0, 0.0};
    }
};

struct ShiftInvariantElement {
    std::vector<SampledGenerator> generators;      // r <= 4 in practice
    std::vector<CoefficientField> coefficients;    // one truncated sequence per generator
    double s{0.0};

    void validate() const {
        if (generators.empty() || generators.size() != coefficients.size())
            throw std::invalid_argument("ShiftInvariantElement: generator/coefficient count mismatch");
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (generators[i].dim != coefficients[i].dim())
                throw std::invalid_argument("ShiftInvariantElement: dimension mismatch");
            if (generators[i].m != generators[0].m || generators[i].dim != generators[0].dim)
                throw std::invalid_argument("ShiftInvariantElement: grid mismatch between generators");
        }
    }
};

/// Pointwise synthesis sum_i sum_k c^i_k phi^i(t + k) on the sample grid
/// (a finite sum, exact up to rounding).
inline SampledFunction synthesize(const ShiftInvariantElement& elem) {
    elem.validate();
    const int d = elem.generators[0].dim;
    const int m = elem.generators[0].m;
    std::array<int, kMaxDim> lo{0, 0, 0}, hi{0, 0, 0};
    bool first = true;
    for (std::size_t i = 0; i < elem.generators.size(); ++i) {
        const auto& g = elem.generators[i];
        const int k_r = elem.coefficients[i].radius();
        for (int a = 0; a < d; ++a) {
            const int l = g.lo[a] - k_r * m, h = g.hi[a] + k_r * m;
            lo[a] = first ? l : std::min(lo[a], l);
            hi[a] = first ? h : std::max(hi[a], h);
        }
        first = false;
    }
    SampledFunction out(d, m, lo, hi);
    for (std::size_t i = 0; i < elem.generators.size(); ++i) {
        const auto& g = elem.generators[i];
        elem.coefficients[i].for_each([&](const MultiIndex& k, const Complex& c) {
            if (c == Complex{0.0, 0.0}) return;
            // phi(t + k) at t = n/m contributes at n = support - k*m.
            detail::for_each_in_span(d, g.lo, g.hi, [&](const std::array<int, kMaxDim>& n) {
                std::array<int, kMaxDim> t = n;
                for (int a = 0; a < d; ++a) t[a] -= k.c[a] * m;
                out.values[out.flat(t)] += c * g.values[g.flat(n)];
            });
        });
    }
    return out;
}

/// Wiener amalgam norm sup_t sum_j |phi(t + j)| evaluated on the grid.
inline double amalgam_norm(const SampledGenerator& g) {
    std::size_t cells = 1;
    for (int i = 0; i < g.dim; ++i) cells *= static_cast<std::size_t>(g.m);
    std::vector<double> folded(cells, 0.0);
    detail::for_each_in_span(g.dim, g.lo, g.hi, [&](const std::array<int, kMaxDim>& n) {
        std::size_t idx = 0;
        for (int i = 0; i < g.dim; ++i) {
            int r = n[i] % g.m;
            if (r < 0) r += g.m;
            idx = idx * static_cast<std::size_t>(g.m) + static_cast<std::size_t>(r);
        }
        folded[idx] += std::abs(g.values[g.flat(n)]);
    });
    double best = 0.0;
    for (double v : folded) best = std::max(best, v);
    return best;
}

struct FiberMatrix {
    int dim{1};
    int m{64};      // torus grid points per axis (t index)
    int kmax{32};   // fiber index range {-K..K}^d
    double s{0.0};
    std::vector<Complex> entries;  // [t-flat (m^d)] x [k-flat ((2K+1)^d)]

    std::size_t t_count() const {
        std::size_t n = 1;
        for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(m);
        return n;
    }
    std::size_t k_count() const {
        std::size_t n = 1;
        for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(2 * kmax + 1);
        return n;
    }
    const Complex& at(std::size_t t_flat, std::size_t k_flat) const {
        return entries[t_flat * k_count() + k_flat];
    }

    /// Discrete H(T, l^2_s) norm: sqrt((1/m^d) sum_t sum_k |E|^2 <k>^{2s}).
    double h_norm() const {
        double acc = 0.0;
        const int side = 2 * kmax + 1;
        const std::size_t kc = k_count();
        std::vector<double> wk(kc);
        for (std::size_t kf = 0; kf < kc; ++kf) {
            std::size_t rem = kf;
            MultiIndex k(dim, 0);
            for (int i = dim - 1; i >= 0; --i) {
                k.c[i] = static_cast<int>(rem % static_cast<std::size_t>(side)) - kmax;
                rem /= static_cast<std::size_t>(side);
            }
            wk[kf] = bracket(k, 2.0 * s);
        }
        for (std::size_t tf = 0; tf < t_count(); ++tf)
            for (std::size_t kf = 0; kf < kc; ++kf) acc += std::norm(at(tf, kf)) * wk[kf];
        return std::sqrt(acc / static_cast<double>(t_count()));
    }
};

/// Fiberization: the matrix psi_hat(t+k)/<k>^s, psi_hat(xi) =
/// <xi>^s phi_hat(xi), with phi_hat computed by FFT quadrature at
/// frequency resolution 1/m over the band [-K, K+1)^d. Requires the
/// generator grid to oversample the band (m >= 4K).
inline FiberMatrix fiberize(const SampledGenerator& g, double s, int kmax, int m_grid) {
    if (g.m != m_grid)
        throw std::invalid_argument("fiberize: generator sampled at a different grid than requested");
    if (m_grid < 4 * kmax)
        throw std::invalid_argument("fiberize: undersampled grid (need M >= 4K)");
    const int d = g.dim;
    FiberMatrix fm;
    fm.dim = d;
    fm.m = m_grid;
    fm.kmax = kmax;
    fm.s = s;
    fm.entries.assign(fm.t_count() * fm.k_count(), Complex{0.0, 0.0});

    const int side = 2 * kmax + 1;
    std::array<int, 3> shape{1, 1, 1};
    for (int i = 0; i < d; ++i) shape[static_cast<std::size_t>(i)] = m_grid;
    const double m2 = static_cast<double>(m_grid) * m_grid;
    const double inv_md = 1.0 / static_cast<double>(fm.t_count());

    TorusGrid fold(d, m_grid);
    std::array<int, kMaxDim> tj{0, 0, 0};
    for (std::size_t tf = 0; tf < fm.t_count(); ++tf) {
        // Decode the t index (row-major, first coordinate slowest).
        std::size_t rem = tf;
        for (int i = d - 1; i >= 0; --i) {
            tj[i] = static_cast<int>(rem % static_cast<std::size_t>(m_grid));
            rem /= static_cast<std::size_t>(m_grid);
        }
        // Fold the modulated samples to period m.
        std::fill(fold.values.begin(), fold.values.end(), Complex{0.0, 0.0});
        detail::for_each_in_span(d, g.lo, g.hi, [&](const std::array<int, kMaxDim>& n) {
            double ph = 0.0;
            for (int i = 0; i < d; ++i) ph += static_cast<double>(tj[i]) * n[i];
            ph *= -2.0 * M_PI / m2;
            fold.values[fold.flat_index(n)] +=
                g.values[g.flat(n)] * Complex(std::cos(ph), std::sin(ph));
        });
        fft_forward(d, shape, fold.values);

        // Extract the fiber row: phi_hat(t + k) = fold_hat[k mod m]/m^d.
        for (std::size_t kf = 0; kf < fm.k_count(); ++kf) {
            std::size_t krem = kf;
            MultiIndex k(d, 0);
            for (int i = d - 1; i >= 0; --i) {
                k.c[i] = static_cast<int>(krem % static_cast<std::size_t>(side)) - kmax;
                krem /= static_cast<std::size_t>(side);
            }
            std::array<int, kMaxDim> km{0, 0, 0};
            std::array<double, kMaxDim> xi{0, 0, 0};
            for (int i = 0; i < d; ++i) {
                km[i] = k.c[i];
                xi[i] = static_cast<double>(tj[i]) / m_grid + k.c[i];
            }
            const Complex phi_hat = fold.at(km) * inv_md;
            fm.entries[tf * fm.k_count() + kf] =
                phi_hat * (bracket_real(xi, d, s) * bracket(k, -s));
        }
    }
    return fm;
}

/// Integer shift T_j phi = phi(. - j) realized on the sample grid.
inline SampledGenerator shifted(const SampledGenerator& g, const MultiIndex& j) {
    SampledGenerator out = g;
    for (int i = 0; i < g.dim; ++i) {
        out.lo[i] += j.c[i] * g.m;
        out.hi[i] += j.c[i] * g.m;
    }
    return out;
}

/// Grid convolution (phi * psi)(n h) = h^d sum_m phi(m h) psi((n-m) h),
/// the trapezoid-quadrature convolution of the sampled generators.
inline SampledGenerator grid_convolve(const SampledGenerator& a, const SampledGenerator& b) {
    if (a.dim != b.dim || a.m != b.m)
        throw std::invalid_argument("grid_convolve: dimension or grid mismatch");
    const int d = a.dim;
    std::array<int, kMaxDim> lo{0, 0, 0}, hi{0, 0, 0};
    for (int i = 0; i < d; ++i) {
        lo[i] = a.lo[i] + b.lo[i];
        hi[i] = a.hi[i] + b.hi[i];
    }
    SampledGenerator out(d, a.m, lo, hi,
                         a.label.empty() && b.label.empty() ? "" : a.label + "*" + b.label,
                         a.smoothness + b.smoothness);
    const double hd = std::pow(1.0 / a.m, d);
    detail::for_each_in_span(d, a.lo, a.hi, [&](const std::array<int, kMaxDim>& n) {
        const double va = a.values[a.flat(n)];
        if (va == 0.0) return;
        detail::for_each_in_span(d, b.lo, b.hi, [&](const std::array<int, kMaxDim>& p) {
            std::array<int, kMaxDim> q{0, 0, 0};
            for (int i = 0; i < d; ++i) q[i] = n[i] + p[i];
            out.values[out.flat(q)] += hd * va * b.values[b.flat(p)];
        });
    });
    return out;
}

/// Convolution product of shift-invariant elements: generators convolve
/// pairwise on the grid and coefficient sequences take their Cauchy
/// product (the same computation as product::cauchy_product_direct).
/// Without cone information the smoothness follows the rule
/// s = min{s1, s2} (requires s1 + s2 >= 0).
inline ShiftInvariantElement si_product(const ShiftInvariantElement& e1,
                                        const ShiftInvariantElement& e2) {
    e1.validate();
    e2.validate();
    if (e1.generators[0].dim != e2.generators[0].dim || e1.generators[0].m != e2.generators[0].m)
        throw std::invalid_argument("si_product: dimension or grid mismatch");
    ShiftInvariantElement out;
    for (std::size_t i = 0; i < e1.generators.size(); ++i)
        for (std::size_t j = 0; j < e2.generators.size(); ++j) {
            out.generators.push_back(grid_convolve(e1.generators[i], e2.generators[j]));
            out.coefficients.push_back(
                cauchy_product_direct(e1.coefficients[i], e2.coefficients[j]));
        }
    out.s = sobolev_product_exponent(e1.s, e2.s);
    return out;
}

/// Cone-aware variant: runs the compatibility check on the coefficient
/// sequences and reports s = -tau from the product order bound.
inline ShiftInvariantElement si_product(const ShiftInvariantElement& e1,
                                        const ShiftInvariantElement& e2,
                                        const std::vector<LatticeCone>& cones1,
                                        const std::vector<LatticeCone>& cones2,
                                        CompatibilityReport* report_out = nullptr) {
    e1.validate();
    e2.validate();
    if (e1.generators.size() != 1 || e2.generators.size() != 1)
        throw std::invalid_argument("si_product with cones: single-generator elements only");
    const auto rep = check_compatibility(e1.coefficients[0], cones1, e2.coefficients[0], cones2);
    if (report_out) *report_out = rep;
    if (!rep.verdict)
        throw std::invalid_argument("si_product: coefficient sequences are not compatible");
    ShiftInvariantElement out;
    out.generators.push_back(grid_convolve(e1.generators[0], e2.generators[0]));
    out.coefficients.push_back(cauchy_product_direct(e1.coefficients[0], e2.coefficients[0]));
    out.s = -rep.tau;
    return out;
}

// ---------------------------------------------------------------------------
// Generator corpus

/// Hat function on [-1,1] with peak 1 (partition of unity under integer
/// shifts).
inline SampledGenerator hat_generator(int m_grid) {
    SampledGenerator g(1, m_grid, {-m_grid, 0, 0}, {m_grid, 0, 0}, "hat", 1.5);
    for (int n = -m_grid; n <= m_grid; ++n)
        g.ref({n, 0, 0}) = 1.0 - std::abs(static_cast<double>(n)) / m_grid;
    return g;
}

/// Cardinal B-spline of order p on [0, p].
inline SampledGenerator bspline_generator(int p, int m_grid) {
    SampledGenerator g(1, m_grid, {0, 0, 0}, {p * m_grid, 0, 0},
                       "bspline" + std::to_string(p), p - 0.5);
    for (int n = 0; n <= p * m_grid; ++n)
        g.ref({n, 0, 0}) = detail::cardinal_bspline(p, static_cast<double>(n) / m_grid);
    return g;
}

/// Truncated Gaussian bump exp(-x^2/(2 sigma^2)) on [-half, half].
inline SampledGenerator gaussian_generator(double sigma, double half_width, int m_grid,
                                           double modulation_freq = 0.0) {
    const int h = static_cast<int>(std::llround(half_width * m_grid));
    SampledGenerator g(1, m_grid, {-h, 0, 0}, {h, 0, 0},
                       modulation_freq == 0.0 ? "gauss" : "gauss_mod", 8.0);
    for (int n = -h; n <= h; ++n) {
        const double x = static_cast<double>(n) / m_grid;
        double v = std::exp(-x * x / (2.0 * sigma * sigma));
        if (modulation_freq != 0.0) v *= std::cos(2.0 * M_PI * modulation_freq * x);
        g.ref({n, 0, 0}) = v;
    }
    return g;
}

}  // namespace perdist
