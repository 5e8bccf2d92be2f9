// cones.hpp
// Polyhedral lattice cones in Z^d given by half-space inequalities with
// integer normals, an optional integer apex, and explicit strict /
// non-strict boundary flags. Provides exact membership, exact
// disjointness-after-negation certificates, translated-cone intersection
// counting c(n) by provably exhaustive enumeration, growth-exponent fits
// of c(n), and the cone-separation constant inf <xi-n>/<n>.
//
// All lattice predicates are evaluated in integer arithmetic (int64 with
// __int128 intermediates); no floating point enters a membership decision.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "perdist/lattice.hpp"
#include "perdist/trace.hpp"

namespace perdist {

using Int3 = std::array<std::int64_t, 3>;

struct HalfSpace {
    Int3 normal{0, 0, 0};
    bool strict{false};  // true: <v,x> > 0, false: <v,x> >= 0
};

namespace detail {

using I128 = __int128;

inline I128 dot128(const Int3& a, const Int3& b) {
    return I128(a[0]) * b[0] + I128(a[1]) * b[1] + I128(a[2]) * b[2];
}

inline Int3 cross_i(const Int3& a, const Int3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero(const Int3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline Int3 add_i(const Int3& a, const Int3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

inline Int3 neg_i(const Int3& a) { return {-a[0], -a[1], -a[2]}; }

}  // namespace detail

class LatticeCone {
  public:
    LatticeCone() = default;
    LatticeCone(int dim, std::vector<HalfSpace> halfspaces, Int3 apex = {0, 0, 0})
        : dim_(dim), halfspaces_(std::move(halfspaces)), apex_(apex) {
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("LatticeCone: dim must be 1, 2, or 3");
        if (halfspaces_.empty()) throw std::invalid_argument("LatticeCone: needs at least one half-space");
        for (const auto& h : halfspaces_) {
            bool any = false;
            for (int i = 0; i < dim; ++i) any = any || h.normal[i] != 0;
            for (int i = dim; i < kMaxDim; ++i)
                if (h.normal[i] != 0) throw std::invalid_argument("LatticeCone: normal exceeds dimension");
            if (!any) throw std::invalid_argument("LatticeCone: zero normal");
        }
        for (int i = dim; i < kMaxDim; ++i)
            if (apex_[i] != 0) throw std::invalid_argument("LatticeCone: apex exceeds dimension");
    }

    int dim() const { return dim_; }
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    const Int3& apex() const { return apex_; }
    bool apex_at_origin() const { return apex_[0] == 0 && apex_[1] == 0 && apex_[2] == 0; }

    /// Exact membership of a lattice point: all half-space constraints
    /// relative to the apex. The apex itself fails any strict constraint.
    bool contains(const MultiIndex& k) const {
        if (k.dim != dim_) throw std::invalid_argument("LatticeCone::contains: dimension mismatch");
        Int3 x{0, 0, 0};
        for (int i = 0; i < dim_; ++i) x[i] = static_cast<std::int64_t>(k.c[i]) - apex_[i];
        for (const auto& h : halfspaces_) {
            const detail::I128 v = detail::dot128(h.normal, x);
            if (h.strict ? v <= 0 : v < 0) return false;
        }
        return true;
    }

    LatticeCone negated() const {
        std::vector<HalfSpace> hs = halfspaces_;
        for (auto& h : hs) h.normal = detail::neg_i(h.normal);
        return LatticeCone(dim_, std::move(hs), detail::neg_i(apex_));
    }

    LatticeCone closure() const {
        std::vector<HalfSpace> hs = halfspaces_;
        for (auto& h : hs) h.strict = false;
        return LatticeCone(dim_, std::move(hs), apex_);
    }

  private:
    int dim_{1};
    std::vector<HalfSpace> halfspaces_;
    Int3 apex_{0, 0, 0};
};

namespace detail {

struct ConeRow {
    Int3 a;
    bool strict;
};

inline bool satisfies(const Int3& x, const std::vector<ConeRow>& rows, bool honor_strict) {
    for (const auto& r : rows) {
        const I128 v = dot128(r.a, x);
        if (honor_strict && r.strict ? v <= 0 : v < 0) return false;
    }
    return true;
}

// Lineality space {u : <a_i,u> = 0 for all i}: returns basis vectors
// (integer) of the kernel of the row matrix, exact.
inline std::vector<Int3> integer_kernel(int dim, const std::vector<ConeRow>& rows) {
    // Gather a maximal independent row set via cross products.
    std::vector<Int3> indep;
    for (const auto& r : rows) {
        if (is_zero(r.a)) continue;
        bool dependent = false;
        if (indep.size() == 1) dependent = is_zero(cross_i(indep[0], r.a));
        if (indep.size() == 2) dependent = dot128(cross_i(indep[0], indep[1]), r.a) == 0;
        if (indep.size() == 3) dependent = true;
        if (!dependent) indep.push_back(r.a);
    }
    const int rank = static_cast<int>(indep.size());
    std::vector<Int3> basis;
    if (rank >= dim) return basis;
    if (dim == 1) return basis;  // rank >= 1 always here
    if (dim == 2) {
        if (rank == 1) basis.push_back({-indep[0][1], indep[0][0], 0});
        return basis;
    }
    // dim == 3
    if (rank == 2) {
        basis.push_back(cross_i(indep[0], indep[1]));
    } else if (rank == 1) {
        const Int3 a = indep[0];
        Int3 u = cross_i(a, Int3{1, 0, 0});
        if (is_zero(u)) u = cross_i(a, Int3{0, 1, 0});
        basis.push_back(u);
        basis.push_back(cross_i(a, u));
    }
    return basis;
}

struct ConicWitness {
    bool nonzero{false};    // does the system admit a nonzero solution?
    bool certified{true};   // exact decision, or heuristic fallback?
    Int3 witness{0, 0, 0};  // a solution when nonzero
    std::string note;
};

// Decides whether {x != 0 : <a_i,x> >= 0 (or > 0 where strict)} is
// nonempty. Exact and certified for d <= 2 and for pointed closures in
// d = 3; degenerate d = 3 systems fall back to a probe and are flagged.
inline ConicWitness conic_system_nonzero(int dim, const std::vector<ConeRow>& rows) {
    ConicWitness res;
    if (dim == 1) {
        for (std::int64_t s : {std::int64_t{1}, std::int64_t{-1}}) {
            Int3 c{s, 0, 0};
            if (satisfies(c, rows, true)) return {true, true, c, "axis ray"};
        }
        return {false, true, {0, 0, 0}, "both rays excluded"};
    }

    // Stage 1: boundary-ray candidates of the closed system.
    std::vector<Int3> primary;
    if (dim == 2) {
        for (const auto& r : rows) {
            primary.push_back({-r.a[1], r.a[0], 0});
            primary.push_back({r.a[1], -r.a[0], 0});
            primary.push_back(r.a);
            primary.push_back(neg_i(r.a));
        }
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                Int3 c = cross_i(rows[i].a, rows[j].a);
                if (!is_zero(c)) {
                    primary.push_back(c);
                    primary.push_back(neg_i(c));
                }
            }
        for (const auto& r : rows) {
            primary.push_back(r.a);
            primary.push_back(neg_i(r.a));
        }
    }
    for (const auto& b : integer_kernel(dim, rows)) {
        primary.push_back(b);
        primary.push_back(neg_i(b));
    }

    // Keep candidates lying in the closure; those are the only possible
    // face directions.
    std::vector<Int3> valid;
    for (const auto& c : primary)
        if (!is_zero(c) && satisfies(c, rows, false)) valid.push_back(c);

    // Any face of the closure the open system meets has its relative
    // interior hit by a ray, a sum of two rays, or the sum of all rays.
    for (const auto& c : valid)
        if (satisfies(c, rows, true)) return {true, true, c, "face ray"};
    for (std::size_t i = 0; i < valid.size(); ++i)
        for (std::size_t j = i + 1; j < valid.size(); ++j) {
            Int3 s = add_i(valid[i], valid[j]);
            if (!is_zero(s) && satisfies(s, rows, false) && satisfies(s, rows, true))
                return {true, true, s, "face interior"};
        }
    if (!valid.empty()) {
        Int3 total{0, 0, 0};
        for (const auto& c : valid) total = add_i(total, c);
        if (!is_zero(total) && satisfies(total, rows, true))
            return {true, true, total, "cone interior"};
    }

    if (dim == 2) return {false, true, {0, 0, 0}, "no admissible direction"};

    // d = 3: with a pointed closure every extreme ray is a cross product,
    // so an empty candidate set certifies emptiness.
    const bool pointed = integer_kernel(dim, rows).empty();
    if (valid.empty() && pointed) return {false, true, {0, 0, 0}, "pointed closure is trivial"};
    if (pointed) return {false, true, {0, 0, 0}, "all faces excluded by strict constraints"};

    // Degenerate (non-pointed) d = 3 system: probe lattice points.
    for (int r = 1; r <= 8; ++r)
        for (int x = -r; x <= r; ++x)
            for (int y = -r; y <= r; ++y)
                for (int z = -r; z <= r; ++z) {
                    if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != r) continue;
                    Int3 c{x, y, z};
                    if (satisfies(c, rows, true)) return {true, false, c, "lattice probe (heuristic)"};
                }
    return {false, false, {0, 0, 0}, "certificate unavailable (non-pointed system); probe-only"};
}

inline std::vector<ConeRow> combined_rows(const LatticeCone& c1_rows_as_is,
                                          const LatticeCone& c2_negated, bool honor_strict) {
    std::vector<ConeRow> rows;
    for (const auto& h : c1_rows_as_is.halfspaces())
        rows.push_back({h.normal, honor_strict && h.strict});
    for (const auto& h : c2_negated.halfspaces())
        rows.push_back({neg_i(h.normal), honor_strict && h.strict});
    return rows;
}

}  // namespace detail

struct DisjointnessResult {
    bool disjoint{false};
    bool certified{true};
    std::string note;
};

/// True iff c1 and -c2 share no nonzero direction (the hypothesis
/// Lambda^1 cap (-Lambda^2) = emptyset, checked on the real cones with
/// the stored boundary conventions). Requires apexes at the origin.
inline DisjointnessResult disjoint_after_negation(const LatticeCone& c1, const LatticeCone& c2) {
    if (c1.dim() != c2.dim())
        throw std::invalid_argument("disjoint_after_negation: dimension mismatch");
    if (!c1.apex_at_origin() || !c2.apex_at_origin())
        throw std::invalid_argument("disjoint_after_negation: apexes must be at the origin");
    // x in c1 and x in -c2  <=>  <a,x> >= 0 for c1 rows and <-b,x> >= 0 for c2 rows.
    auto rows = detail::combined_rows(c1, c2, true);
    auto w = detail::conic_system_nonzero(c1.dim(), rows);
    return {!w.nonzero, w.certified, w.note};
}

// Closure-level disjointness: guarantees boundedness of the counting
// region. Strictly stronger than disjoint_after_negation when the two
// open cones only touch along boundary rays.
inline DisjointnessResult closures_disjoint_after_negation(const LatticeCone& c1,
                                                           const LatticeCone& c2) {
    if (c1.dim() != c2.dim())
        throw std::invalid_argument("closures_disjoint_after_negation: dimension mismatch");
    auto rows = detail::combined_rows(c1.closure(), c2.closure(), true);
    auto w = detail::conic_system_nonzero(c1.dim(), rows);
    return {!w.nonzero, w.certified, w.note};
}

namespace detail {

struct Inequality {
    Int3 a;
    std::int64_t b;  // <a,x> >= b (closed form; strictness irrelevant for bounding)
};

struct RationalVertex {
    I128 num[3];
    I128 den;  // > 0
};

inline std::optional<RationalVertex> solve_2x2(const Inequality& r0, const Inequality& r1) {
    const I128 det = I128(r0.a[0]) * r1.a[1] - I128(r0.a[1]) * r1.a[0];
    if (det == 0) return std::nullopt;
    RationalVertex v;
    v.num[0] = I128(r0.b) * r1.a[1] - I128(r0.a[1]) * r1.b;
    v.num[1] = I128(r0.a[0]) * r1.b - I128(r0.b) * r1.a[0];
    v.num[2] = 0;
    v.den = det;
    if (v.den < 0) {
        v.den = -v.den;
        v.num[0] = -v.num[0];
        v.num[1] = -v.num[1];
    }
    return v;
}

inline I128 det3(const Int3& a, const Int3& b, const Int3& c) {
    return I128(a[0]) * (I128(b[1]) * c[2] - I128(b[2]) * c[1]) -
           I128(a[1]) * (I128(b[0]) * c[2] - I128(b[2]) * c[0]) +
           I128(a[2]) * (I128(b[0]) * c[1] - I128(b[1]) * c[0]);
}

inline std::optional<RationalVertex> solve_3x3(const Inequality& r0, const Inequality& r1,
                                               const Inequality& r2) {
    const I128 det = det3(r0.a, r1.a, r2.a);
    if (det == 0) return std::nullopt;
    RationalVertex v;
    v.den = det;
    const Int3 bs{r0.b, r1.b, r2.b};
    for (int col = 0; col < 3; ++col) {
        Int3 m0 = r0.a, m1 = r1.a, m2 = r2.a;
        m0[col] = bs[0];
        m1[col] = bs[1];
        m2[col] = bs[2];
        v.num[col] = det3(m0, m1, m2);
    }
    if (v.den < 0) {
        v.den = -v.den;
        for (auto& n : v.num) n = -n;
    }
    return v;
}

inline bool vertex_feasible(const RationalVertex& v, const std::vector<Inequality>& ineqs, int dim) {
    for (const auto& q : ineqs) {
        I128 lhs = 0;
        for (int i = 0; i < dim; ++i) lhs += I128(q.a[i]) * v.num[i];
        if (lhs < I128(q.b) * v.den) return false;
    }
    return true;
}

inline std::int64_t floor_div(I128 p, I128 q) {  // q > 0
    I128 d = p / q;
    if (p % q != 0 && p < 0) --d;
    return static_cast<std::int64_t>(d);
}
inline std::int64_t ceil_div(I128 p, I128 q) {  // q > 0
    I128 d = p / q;
    if (p % q != 0 && p > 0) ++d;
    return static_cast<std::int64_t>(d);
}

// Exact coordinate bounding box of the (bounded) polyhedron {<a,x> >= b},
// from the full vertex enumeration. Empty optional when infeasible.
inline std::optional<std::pair<Int3, Int3>> vertex_bounding_box(int dim,
                                                                const std::vector<Inequality>& ineqs) {
    bool any = false;
    I128 lo_num[3], hi_num[3], lo_den[3], hi_den[3];
    auto consider = [&](const RationalVertex& v) {
        if (!vertex_feasible(v, ineqs, dim)) return;
        if (!any) {
            for (int i = 0; i < dim; ++i) {
                lo_num[i] = hi_num[i] = v.num[i];
                lo_den[i] = hi_den[i] = v.den;
            }
            any = true;
            return;
        }
        for (int i = 0; i < dim; ++i) {
            if (v.num[i] * lo_den[i] < lo_num[i] * v.den) {
                lo_num[i] = v.num[i];
                lo_den[i] = v.den;
            }
            if (v.num[i] * hi_den[i] > hi_num[i] * v.den) {
                hi_num[i] = v.num[i];
                hi_den[i] = v.den;
            }
        }
    };

    const std::size_t m = ineqs.size();
    if (dim == 1) {
        for (const auto& q : ineqs) {
            if (q.a[0] == 0) continue;
            RationalVertex v;
            v.num[0] = q.b;
            v.num[1] = v.num[2] = 0;
            v.den = q.a[0];
            if (v.den < 0) {
                v.den = -v.den;
                v.num[0] = -v.num[0];
            }
            consider(v);
        }
    } else if (dim == 2) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (auto v = solve_2x2(ineqs[i], ineqs[j])) consider(*v);
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k)
                    if (auto v = solve_3x3(ineqs[i], ineqs[j], ineqs[k])) consider(*v);
    }
    if (!any) return std::nullopt;
    Int3 lo{0, 0, 0}, hi{0, 0, 0};
    for (int i = 0; i < dim; ++i) {
        lo[i] = floor_div(lo_num[i], lo_den[i]) - 1;
        hi[i] = ceil_div(hi_num[i], hi_den[i]) + 1;
    }
    return std::make_pair(lo, hi);
}

}  // namespace detail

/// Exact count of { k in Z^d : k in c2 and n-k in c1 }. Requires the cone
/// closures to be disjoint after negation; otherwise the region is
/// unbounded and an exception is thrown.
inline long long intersection_count(const LatticeCone& c1, const LatticeCone& c2,
                                    const MultiIndex& n) {
    if (c1.dim() != c2.dim() || c1.dim() != n.dim)
        throw std::invalid_argument("intersection_count: dimension mismatch");
    const int dim = c1.dim();

    // Recession directions of {x in c2, n-x in c1} are closure(c2) cap
    // (-closure(c1)); a nonzero one makes the count infinite.
    {
        auto rows = detail::combined_rows(c2.closure(), c1.closure(), true);
        auto w = detail::conic_system_nonzero(dim, rows);
        if (w.nonzero)
            throw std::runtime_error(
                "intersection_count: unbounded region (cone closures intersect after negation along " +
                std::string(1, '(') + std::to_string(w.witness[0]) + "," +
                std::to_string(w.witness[1]) + "," + std::to_string(w.witness[2]) + "))");
    }

    std::vector<detail::Inequality> ineqs;
    Int3 apex2 = c2.apex();
    for (const auto& h : c2.halfspaces())
        ineqs.push_back({h.normal, static_cast<std::int64_t>(detail::dot128(h.normal, apex2))});
    Int3 apex1 = c1.apex();
    for (const auto& h : c1.halfspaces()) {
        // <a, n - x - apex1> >= 0  <=>  <-a, x> >= <a, apex1> - <a, n>
        Int3 nn{0, 0, 0};
        for (int i = 0; i < dim; ++i) nn[i] = n.c[i];
        const std::int64_t rhs = static_cast<std::int64_t>(detail::dot128(h.normal, apex1) -
                                                           detail::dot128(h.normal, nn));
        ineqs.push_back({detail::neg_i(h.normal), rhs});
    }

    auto box = detail::vertex_bounding_box(dim, ineqs);
    if (!box) return 0;
    const auto& [lo, hi] = *box;

    long long count = 0;
    MultiIndex k(dim, 0);
    for (std::int64_t x = lo[0]; x <= hi[0]; ++x) {
        k.c[0] = static_cast<int>(x);
        if (dim == 1) {
            if (c2.contains(k) && c1.contains(n - k)) ++count;
            continue;
        }
        for (std::int64_t y = lo[1]; y <= hi[1]; ++y) {
            k.c[1] = static_cast<int>(y);
            if (dim == 2) {
                if (c2.contains(k) && c1.contains(n - k)) ++count;
                continue;
            }
            for (std::int64_t z = lo[2]; z <= hi[2]; ++z) {
                k.c[2] = static_cast<int>(z);
                if (c2.contains(k) && c1.contains(n - k)) ++count;
            }
        }
    }
    return count;
}

/// Uniform unit-direction grid: the two signs for d=1, `count` equally
/// spaced angles for d=2, rings at five latitudes for d=3.
inline std::vector<std::array<double, kMaxDim>> uniform_directions(int dim, int count = 16) {
    std::vector<std::array<double, kMaxDim>> dirs;
    if (dim == 1) {
        dirs.push_back({1, 0, 0});
        dirs.push_back({-1, 0, 0});
    } else if (dim == 2) {
        for (int i = 0; i < count; ++i) {
            const double a = 2.0 * M_PI * i / count;
            dirs.push_back({std::cos(a), std::sin(a), 0});
        }
    } else {
        const int per_ring = std::max(4, count / 2);
        for (int iz = -2; iz <= 2; ++iz)
            for (int i = 0; i < per_ring; ++i) {
                const double a = 2.0 * M_PI * i / per_ring;
                const double z = iz / 2.0;
                const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
                if (r == 0.0 && i > 0) continue;
                dirs.push_back({r * std::cos(a), r * std::sin(a), z});
            }
    }
    return dirs;
}

struct CountGrowthFit {
    std::vector<std::pair<double, long long>> samples;  // (|n|, c(n))
    double gamma_hat{0.0};
    double c_hat{0.0};
};

/// Samples c(n) for n = round(r*u) over the given radii and unit
/// directions and fits c(n) ~ C |n|^gamma. Counts are fitted per
/// direction family (log-log least squares over the positive counts) and
/// gamma_hat is the largest per-direction slope: the bound must hold for
/// every n, so the fastest-growing family is the binding one. C_hat is
/// the envelope constant max c(n)/|n|^gamma_hat over all samples.
inline CountGrowthFit count_growth_fit(const LatticeCone& c1, const LatticeCone& c2,
                                       const std::vector<std::array<double, kMaxDim>>& directions,
                                       const std::vector<int>& radii) {
    if (c1.dim() != c2.dim()) throw std::invalid_argument("count_growth_fit: dimension mismatch");
    const int dim = c1.dim();
    CountGrowthFit fit;
    bool any_slope = false;
    for (const auto& u : directions) {
        std::vector<double> lx, ly;
        MultiIndex prev(dim, 0);
        for (int r : radii) {
            MultiIndex n(dim, 0);
            for (int i = 0; i < dim; ++i) n.c[i] = static_cast<int>(std::llround(r * u[i]));
            if (n.norm2() == 0 || n == prev) continue;
            prev = n;
            const long long c = intersection_count(c1, c2, n);
            fit.samples.emplace_back(n.norm(), c);
            if (c > 0) {
                lx.push_back(std::log(n.norm()));
                ly.push_back(std::log(static_cast<double>(c)));
            }
        }
        if (lx.size() >= 2) {
            fit.gamma_hat = std::max(fit.gamma_hat, least_squares_slope(lx, ly));
            any_slope = true;
        }
    }
    if (!any_slope) {
        fit.gamma_hat = 0.0;
        fit.c_hat = 0.0;
        return fit;
    }
    for (const auto& [r, c] : fit.samples)
        if (c > 0) fit.c_hat = std::max(fit.c_hat, static_cast<double>(c) / std::pow(r, fit.gamma_hat));
    return fit;
}

namespace detail {

inline std::vector<Int3> closure_edge_rays(const LatticeCone& cone) {
    std::vector<ConeRow> rows;
    for (const auto& h : cone.halfspaces()) rows.push_back({h.normal, false});
    std::vector<Int3> cands;
    const int dim = cone.dim();
    if (dim == 1) {
        cands.push_back({1, 0, 0});
        cands.push_back({-1, 0, 0});
    } else if (dim == 2) {
        for (const auto& r : rows) {
            cands.push_back({-r.a[1], r.a[0], 0});
            cands.push_back({r.a[1], -r.a[0], 0});
        }
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                Int3 c = cross_i(rows[i].a, rows[j].a);
                if (!is_zero(c)) {
                    cands.push_back(c);
                    cands.push_back(neg_i(c));
                }
            }
    }
    std::vector<Int3> rays;
    for (const auto& c : cands)
        if (!is_zero(c) && satisfies(c, rows, false)) rays.push_back(c);
    return rays;
}

inline std::vector<std::array<double, 3>> closure_edge_directions(const LatticeCone& cone) {
    std::vector<std::array<double, 3>> dirs;
    for (const auto& c : closure_edge_rays(cone)) {
        double len = std::sqrt(double(c[0]) * c[0] + double(c[1]) * c[1] + double(c[2]) * c[2]);
        dirs.push_back({c[0] / len, c[1] / len, c[2] / len});
    }
    return dirs;
}

// Exact: every constraint of `cone` strictly positive on the integer ray.
inline bool strictly_inside(const LatticeCone& cone, const Int3& ray) {
    for (const auto& h : cone.halfspaces())
        if (dot128(h.normal, ray) <= 0) return false;
    return true;
}

// Euclidean projection of p onto the closure of a polyhedral cone with
// apex at the origin (d <= 3): nearest candidate among the apex, the edge
// rays, and the facet-plane projections that land inside the cone.
inline std::array<double, 3> project_onto_cone(const LatticeCone& cone,
                                               const std::array<double, 3>& p) {
    const int dim = cone.dim();
    auto inside_closure = [&](const std::array<double, 3>& x) {
        for (const auto& h : cone.halfspaces()) {
            double v = 0;
            for (int i = 0; i < dim; ++i) v += static_cast<double>(h.normal[i]) * x[i];
            if (v < -1e-9 * (1.0 + std::abs(v))) return false;
        }
        return true;
    };
    std::array<double, 3> best{0, 0, 0};
    double best_d2 = 0;
    for (int i = 0; i < dim; ++i) best_d2 += p[i] * p[i];  // apex candidate

    auto consider = [&](const std::array<double, 3>& q) {
        if (!inside_closure(q)) return;
        double d2 = 0;
        for (int i = 0; i < dim; ++i) d2 += (p[i] - q[i]) * (p[i] - q[i]);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = q;
        }
    };

    if (inside_closure(p)) return p;
    // Facet-plane projections.
    for (const auto& h : cone.halfspaces()) {
        double nn = 0, pn = 0;
        for (int i = 0; i < dim; ++i) {
            nn += static_cast<double>(h.normal[i]) * h.normal[i];
            pn += static_cast<double>(h.normal[i]) * p[i];
        }
        std::array<double, 3> q{0, 0, 0};
        for (int i = 0; i < dim; ++i) q[i] = p[i] - pn / nn * static_cast<double>(h.normal[i]);
        consider(q);
    }
    // Edge-ray projections.
    for (const auto& e : closure_edge_directions(cone)) {
        double t = 0;
        for (int i = 0; i < dim; ++i) t += p[i] * e[i];
        if (t < 0) t = 0;
        std::array<double, 3> q{t * e[0], t * e[1], t * e[2]};
        consider(q);
    }
    return best;
}

}  // namespace detail

/// Minimum of <xi - n> / <n> over xi in the inner cone and lattice
/// n not in the outer cone, both within radius R; the separation constant
/// of the inequality <xi - n> >= C <n>. Requires inner strictly inside
/// outer (positive angular margin).
inline double cone_separation_constant(const LatticeCone& inner, const LatticeCone& outer,
                                       int radius) {
    if (inner.dim() != outer.dim())
        throw std::invalid_argument("cone_separation_constant: dimension mismatch");
    if (radius < 1) throw std::invalid_argument("cone_separation_constant: radius must be >= 1");
    const int dim = inner.dim();

    auto edges = detail::closure_edge_rays(inner);
    if (edges.empty())
        throw std::invalid_argument("cone_separation_constant: inner cone has no admissible directions");
    for (const auto& e : edges)
        if (!detail::strictly_inside(outer, e))
            throw std::invalid_argument(
                "cone_separation_constant: inner cone not compactly contained in outer (zero angular margin)");

    double best = std::numeric_limits<double>::infinity();
    MultiIndex n(dim, 0);
    auto visit = [&](const MultiIndex& q) {
        if (q.norm2() == 0) return;
        if (q.norm2() > static_cast<std::int64_t>(radius) * radius) return;
        if (outer.contains(q)) return;
        std::array<double, 3> p{0, 0, 0};
        for (int i = 0; i < dim; ++i) p[i] = q.c[i];
        auto xi = detail::project_onto_cone(inner, p);
        std::array<double, kMaxDim> diff{0, 0, 0};
        for (int i = 0; i < dim; ++i) diff[i] = xi[i] - p[i];
        const double ratio = bracket_real(diff, dim, 1.0) / bracket(q, 1.0);
        best = std::min(best, ratio);
    };
    if (dim == 1) {
        for (int x = -radius; x <= radius; ++x) visit(MultiIndex(1, x));
    } else if (dim == 2) {
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y) visit(MultiIndex(2, x, y));
    } else {
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y)
                for (int z = -radius; z <= radius; ++z) visit(MultiIndex(3, x, y, z));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Cone builders

/// d=1 half-line { sign * t > 0 } (strict by default, matching open cones).
inline LatticeCone halfline_cone(int sign, bool strict = true) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("halfline_cone: sign must be +-1");
    return LatticeCone(1, {HalfSpace{{sign, 0, 0}, strict}});
}

/// d=2 sector of half-angle `half_angle_deg` around direction
/// `center_deg` (degrees); edges non-strict, realized with integer
/// normals at the given scale.
inline LatticeCone sector_cone(double center_deg, double half_angle_deg, bool strict_edges = false,
                               std::int64_t scale = 100000) {
    if (half_angle_deg <= 0 || half_angle_deg >= 90)
        throw std::invalid_argument("sector_cone: half angle must be in (0, 90) degrees");
    const double c = center_deg * M_PI / 180.0;
    const double h = half_angle_deg * M_PI / 180.0;
    auto normal_at = [&](double ang) {
        return Int3{static_cast<std::int64_t>(std::llround(scale * std::cos(ang))),
                    static_cast<std::int64_t>(std::llround(scale * std::sin(ang))), 0};
    };
    // Edge at angle c-h has inward normal at c-h+90deg; edge at c+h has
    // inward normal at c+h-90deg.
    std::vector<HalfSpace> hs;
    hs.push_back({normal_at(c - h + M_PI / 2), strict_edges});
    hs.push_back({normal_at(c + h - M_PI / 2), strict_edges});
    return LatticeCone(2, std::move(hs));
}

/// Polyhedral approximation of the circular cone of half-angle
/// `half_angle_deg` around the unit direction `dir`: a sector for d=2 and
/// a circumscribed `facets`-gon cone for d=3.
inline LatticeCone circular_cone(int dim, const std::array<double, kMaxDim>& dir,
                                 double half_angle_deg, int facets = 16,
                                 std::int64_t scale = 100000) {
    if (half_angle_deg <= 0 || half_angle_deg >= 90)
        throw std::invalid_argument("circular_cone: half angle must be in (0, 90) degrees");
    if (dim == 1) return halfline_cone(dir[0] >= 0 ? 1 : -1);
    if (dim == 2) {
        const double ang = std::atan2(dir[1], dir[0]) * 180.0 / M_PI;
        return sector_cone(ang, half_angle_deg, false, scale);
    }
    double len = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    if (len == 0) throw std::invalid_argument("circular_cone: zero direction");
    std::array<double, 3> a{dir[0] / len, dir[1] / len, dir[2] / len};
    // Orthonormal basis of the plane orthogonal to a.
    std::array<double, 3> u{0, 0, 0};
    if (std::abs(a[0]) <= std::abs(a[1]) && std::abs(a[0]) <= std::abs(a[2])) u = {1, 0, 0};
    else if (std::abs(a[1]) <= std::abs(a[2])) u = {0, 1, 0};
    else u = {0, 0, 1};
    std::array<double, 3> e1{u[1] * a[2] - u[2] * a[1], u[2] * a[0] - u[0] * a[2],
                             u[0] * a[1] - u[1] * a[0]};
    double e1len = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (auto& v : e1) v /= e1len;
    std::array<double, 3> e2{a[1] * e1[2] - a[2] * e1[1], a[2] * e1[0] - a[0] * e1[2],
                             a[0] * e1[1] - a[1] * e1[0]};
    const double th = half_angle_deg * M_PI / 180.0;
    std::vector<HalfSpace> hs;
    for (int j = 0; j < facets; ++j) {
        const double phi = 2.0 * M_PI * j / facets;
        // Supporting plane tangent along azimuth phi: inward normal
        // sin(th)*a - cos(th)*(cos(phi) e1 + sin(phi) e2).
        Int3 v;
        for (int i = 0; i < 3; ++i) {
            const double comp = std::sin(th) * a[i] -
                                std::cos(th) * (std::cos(phi) * e1[i] + std::sin(phi) * e2[i]);
            v[i] = static_cast<std::int64_t>(std::llround(scale * comp));
        }
        hs.push_back({v, false});
    }
    return LatticeCone(3, std::move(hs));
}

/// The standard disjoint d=2 pair: Gamma1 = {t>0, |s| <= t/2},
/// Gamma2 = {s>0, |t| <= s/2}.
inline LatticeCone standard_cone_gamma1() {
    return LatticeCone(2, {HalfSpace{{1, 0, 0}, true}, HalfSpace{{1, -2, 0}, false},
                           HalfSpace{{1, 2, 0}, false}});
}
inline LatticeCone standard_cone_gamma2() {
    return LatticeCone(2, {HalfSpace{{0, 1, 0}, true}, HalfSpace{{-2, 1, 0}, false},
                           HalfSpace{{2, 1, 0}, false}});
}

}  // namespace perdist
