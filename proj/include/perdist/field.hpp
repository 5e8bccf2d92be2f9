// field.hpp
// Dense truncated Fourier coefficient fields over the centered lattice box
// {-N..N}^d, stored row-major with the first coordinate slowest, plus the
// uniform torus sample grid used for quadrature.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "perdist/lattice.hpp"

namespace perdist {

using Complex = std::complex<double>;

// Truncated coefficient field: the concrete stand-in for f = sum a_k e_k.
// Data layout for d=2: index (k1,k2) -> (k1+N)*(2N+1) + (k2+N).
class CoefficientField {
  public:
    CoefficientField() = default;
    CoefficientField(int dim, int radius) : dim_(dim), radius_(radius) {
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("CoefficientField: dim must be 1, 2, or 3");
        if (radius < 0) throw std::invalid_argument("CoefficientField: radius must be >= 0");
        std::size_t n = 1;
        for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(side());
        data_.assign(n, Complex{0.0, 0.0});
    }

    int dim() const { return dim_; }
    int radius() const { return radius_; }
    int side() const { return 2 * radius_ + 1; }
    std::size_t size() const { return data_.size(); }

    bool in_box(const MultiIndex& k) const {
        if (k.dim != dim_) return false;
        for (int i = 0; i < dim_; ++i)
            if (k.c[i] < -radius_ || k.c[i] > radius_) return false;
        return true;
    }

    std::size_t flat_index(const MultiIndex& k) const {
        std::size_t idx = 0;
        for (int i = 0; i < dim_; ++i)
            idx = idx * static_cast<std::size_t>(side()) + static_cast<std::size_t>(k.c[i] + radius_);
        return idx;
    }

    MultiIndex index_at(std::size_t flat) const {
        MultiIndex k;
        k.dim = dim_;
        for (int i = dim_ - 1; i >= 0; --i) {
            k.c[i] = static_cast<int>(flat % static_cast<std::size_t>(side())) - radius_;
            flat /= static_cast<std::size_t>(side());
        }
        return k;
    }

    Complex& at(const MultiIndex& k) { return data_[flat_index(k)]; }
    const Complex& at(const MultiIndex& k) const { return data_[flat_index(k)]; }

    // Coefficient a_k, reading indices outside the stored box as zero.
    Complex coeff_or_zero(const MultiIndex& k) const {
        return in_box(k) ? data_[flat_index(k)] : Complex{0.0, 0.0};
    }

    std::vector<Complex>& data() { return data_; }
    const std::vector<Complex>& data() const { return data_; }

    // Visits every stored index as (MultiIndex, value).
    template <class F>
    void for_each(F&& f) const {
        MultiIndex k;
        k.dim = dim_;
        const int n = radius_;
        std::size_t flat = 0;
        if (dim_ == 1) {
            for (int a = -n; a <= n; ++a) {
                k.c[0] = a;
                f(k, data_[flat++]);
            }
        } else if (dim_ == 2) {
            for (int a = -n; a <= n; ++a)
                for (int b = -n; b <= n; ++b) {
                    k.c[0] = a;
                    k.c[1] = b;
                    f(k, data_[flat++]);
                }
        } else {
            for (int a = -n; a <= n; ++a)
                for (int b = -n; b <= n; ++b)
                    for (int c = -n; c <= n; ++c) {
                        k.c[0] = a;
                        k.c[1] = b;
                        k.c[2] = c;
                        f(k, data_[flat++]);
                    }
        }
    }

    friend bool operator==(const CoefficientField& a, const CoefficientField& b) {
        return a.dim_ == b.dim_ && a.radius_ == b.radius_ && a.data_ == b.data_;
    }

  private:
    int dim_{1};
    int radius_{0};
    std::vector<Complex> data_;
};

/// Weighted sequence norm (sum |a_k|^p <k>^(p*s))^(1/p) over the stored box;
/// only p = 1 and p = 2 are supported.
inline double weighted_norm(const CoefficientField& a, double s, double p) {
    if (p != 1.0 && p != 2.0)
        throw std::invalid_argument("weighted_norm: only p = 1 and p = 2 are supported");
    double acc = 0.0;
    if (p == 2.0) {
        a.for_each([&](const MultiIndex& k, const Complex& v) {
            acc += std::norm(v) * bracket(k, 2.0 * s);
        });
        return std::sqrt(acc);
    }
    a.for_each([&](const MultiIndex& k, const Complex& v) { acc += std::abs(v) * bracket(k, s); });
    return acc;
}

// Samples of a function on the uniform grid { j/m : j in [0,m)^d } of the
// unit torus, row-major with the first coordinate slowest.
struct TorusGrid {
    int dim{1};
    int m{0};  // samples per axis
    std::vector<Complex> values;

    TorusGrid() = default;
    TorusGrid(int d, int m_) : dim(d), m(m_) {
        if (d < 1 || d > kMaxDim) throw std::invalid_argument("TorusGrid: dim must be 1, 2, or 3");
        if (m_ < 1) throw std::invalid_argument("TorusGrid: m must be >= 1");
        std::size_t n = 1;
        for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(m_);
        values.assign(n, Complex{0.0, 0.0});
    }

    std::size_t size() const { return values.size(); }

    std::size_t flat_index(const std::array<int, kMaxDim>& j) const {
        std::size_t idx = 0;
        for (int i = 0; i < dim; ++i) {
            int r = j[i] % m;
            if (r < 0) r += m;
            idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(r);
        }
        return idx;
    }

    Complex& at(const std::array<int, kMaxDim>& j) { return values[flat_index(j)]; }
    const Complex& at(const std::array<int, kMaxDim>& j) const { return values[flat_index(j)]; }
};

}  // namespace perdist
