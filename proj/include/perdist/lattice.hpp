// lattice.hpp
// Multi-index arithmetic on Z^d (d <= 3), Japanese-bracket weights
// <k>^s = (1+|k|^2)^(s/2), weighted sequence norms, and the Peetre-type
// inequality <y>^r <= 2^(|r|/2) <x>^r <y-x>^(|r|).
//
// |k|^2 is always accumulated in integer arithmetic before any floating
// computation, so bracket weights of lattice points carry no cancellation
// error beyond the final pow().

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace perdist {

constexpr int kMaxDim = 3;

// A point of Z^d, d in {1,2,3}. Unused coordinates stay zero so that
// arithmetic and hashing never have to branch on the dimension.
struct MultiIndex {
    int dim{1};
    std::array<int, kMaxDim> c{0, 0, 0};

    MultiIndex() = default;
    MultiIndex(int d, int k0, int k1 = 0, int k2 = 0) : dim(d), c{k0, k1, k2} {
        if (d < 1 || d > kMaxDim) throw std::invalid_argument("MultiIndex: dim must be 1, 2, or 3");
    }

    int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    std::int64_t norm2() const {
        std::int64_t n = 0;
        for (int i = 0; i < dim; ++i) n += static_cast<std::int64_t>(c[i]) * c[i];
        return n;
    }
    double norm() const { return std::sqrt(static_cast<double>(norm2())); }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex r = a;
        for (int i = 0; i < a.dim; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex r = a;
        for (int i = 0; i < a.dim; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend MultiIndex operator-(const MultiIndex& a) {
        MultiIndex r = a;
        for (int i = 0; i < a.dim; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.dim == b.dim && a.c == b.c;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim; ++i) s += std::to_string(c[i]) + (i + 1 < dim ? "," : "");
        return s + ")";
    }
};

// 1 + |k|^2 as an exact integer.
inline std::int64_t bracket_sq_int(const MultiIndex& k) { return 1 + k.norm2(); }

/// Japanese bracket weight <k>^s = (1+|k|^2)^(s/2).
inline double bracket(const MultiIndex& k, double s) {
    if (s == 0.0) return 1.0;
    return std::pow(static_cast<double>(bracket_sq_int(k)), 0.5 * s);
}

// Real-argument variant, used for frequencies t+k off the lattice.
inline double bracket_real(const double* x, int dim, double s) {
    double n2 = 0;
    for (int i = 0; i < dim; ++i) n2 += x[i] * x[i];
    if (s == 0.0) return 1.0;
    return std::pow(1.0 + n2, 0.5 * s);
}

inline double bracket_real(const std::array<double, kMaxDim>& x, int dim, double s) {
    return bracket_real(x.data(), dim, s);
}

struct PeetreBound {
    double lhs;  // <y>^r
    double rhs;  // 2^(|r|/2) <x>^r <y-x>^(|r|)
};

/// Both sides of <y>^r <= 2^(|r|/2) <x>^r <y-x>^(|r|); lhs <= rhs for
/// every x, y in R^d and real r.
inline PeetreBound peetre_bound(const std::array<double, kMaxDim>& x,
                                const std::array<double, kMaxDim>& y, int dim, double r) {
    std::array<double, kMaxDim> diff{0, 0, 0};
    for (int i = 0; i < dim; ++i) diff[i] = y[i] - x[i];
    const double lhs = bracket_real(y, dim, r);
    const double rhs = std::pow(2.0, 0.5 * std::abs(r)) * bracket_real(x, dim, r) *
                       bracket_real(diff, dim, std::abs(r));
    return {lhs, rhs};
}

}  // namespace perdist
