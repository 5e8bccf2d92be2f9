// closed_forms.hpp
// Ground-truth corpus of periodic distributions with exactly known Fourier
// coefficients: Dirac comb, constants, single harmonics, sawtooth and
// square wave (1D prototypes), tensor products, and power-envelope fields
// supported on a lattice cone.

#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perdist/cones.hpp"
#include "perdist/field.hpp"
#include "perdist/lattice.hpp"

namespace perdist {

struct ClosedFormSpec {
    enum class Kind { dirac_comb, constant, harmonic, sawtooth, square_wave, tensor, cone_supported };

    Kind kind{Kind::constant};
    int dim_hint{1};                       // dirac_comb / constant
    MultiIndex harmonic_index{1, 0};       // harmonic
    std::vector<ClosedFormSpec> factors;   // tensor
    std::optional<LatticeCone> cone;       // cone_supported
    double inside_exp{0.0};
    double outside_exp{0.0};

    static ClosedFormSpec dirac_comb(int dim) {
        ClosedFormSpec s;
        s.kind = Kind::dirac_comb;
        s.dim_hint = dim;
        return s;
    }
    static ClosedFormSpec constant(int dim) {
        ClosedFormSpec s;
        s.kind = Kind::constant;
        s.dim_hint = dim;
        return s;
    }
    static ClosedFormSpec harmonic(const MultiIndex& m) {
        ClosedFormSpec s;
        s.kind = Kind::harmonic;
        s.harmonic_index = m;
        return s;
    }
    static ClosedFormSpec sawtooth() {
        ClosedFormSpec s;
        s.kind = Kind::sawtooth;
        return s;
    }
    static ClosedFormSpec square_wave() {
        ClosedFormSpec s;
        s.kind = Kind::square_wave;
        return s;
    }
    static ClosedFormSpec tensor(ClosedFormSpec a, ClosedFormSpec b) {
        ClosedFormSpec s;
        s.kind = Kind::tensor;
        s.factors.push_back(std::move(a));
        s.factors.push_back(std::move(b));
        return s;
    }
    static ClosedFormSpec cone_supported(LatticeCone c, double inside, double outside) {
        ClosedFormSpec s;
        s.kind = Kind::cone_supported;
        s.cone = std::move(c);
        s.inside_exp = inside;
        s.outside_exp = outside;
        if (!std::isfinite(inside) || !std::isfinite(outside))
            throw std::invalid_argument("cone_supported: exponents must be finite");
        return s;
    }

    int dim() const {
        switch (kind) {
            case Kind::dirac_comb:
            case Kind::constant: return dim_hint;
            case Kind::harmonic: return harmonic_index.dim;
            case Kind::sawtooth:
            case Kind::square_wave: return 1;
            case Kind::tensor: return factors[0].dim() + factors[1].dim();
            case Kind::cone_supported: return cone->dim();
        }
        return 1;
    }
};

/// Exact truncated coefficient field of a corpus distribution.
inline CoefficientField from_closed_form(const ClosedFormSpec& spec, int radius) {
    if (radius < 1) throw std::invalid_argument("from_closed_form: radius must be >= 1");
    using Kind = ClosedFormSpec::Kind;
    const int d = spec.dim();
    if (d > kMaxDim) throw std::invalid_argument("from_closed_form: tensor dimension exceeds 3");
    CoefficientField f(d, radius);

    switch (spec.kind) {
        case Kind::dirac_comb:
            for (auto& v : f.data()) v = 1.0;
            break;
        case Kind::constant:
            f.at(MultiIndex(d, 0)) = 1.0;
            break;
        case Kind::harmonic: {
            if (!f.in_box(spec.harmonic_index))
                throw std::invalid_argument("from_closed_form: harmonic index outside the box");
            f.at(spec.harmonic_index) = 1.0;
            break;
        }
        case Kind::sawtooth: {
            // x - 1/2 on (0,1): a_0 = 0, a_n = -1/(2 pi i n) = i/(2 pi n).
            for (int n = -radius; n <= radius; ++n)
                if (n != 0) f.at(MultiIndex(1, n)) = Complex(0.0, 1.0 / (2.0 * M_PI * n));
            break;
        }
        case Kind::square_wave: {
            // Indicator of (0,1/2): a_0 = 1/2, a_n = 1/(pi i n) for odd n.
            f.at(MultiIndex(1, 0)) = 0.5;
            for (int n = -radius; n <= radius; ++n)
                if (n % 2 != 0) f.at(MultiIndex(1, n)) = Complex(0.0, -1.0 / (M_PI * n));
            break;
        }
        case Kind::tensor: {
            const CoefficientField a = from_closed_form(spec.factors[0], radius);
            const CoefficientField b = from_closed_form(spec.factors[1], radius);
            const int da = a.dim();
            f.for_each([&](const MultiIndex& k, const Complex&) {
                MultiIndex ka(da, 0), kb(d - da, 0);
                for (int i = 0; i < da; ++i) ka.c[i] = k.c[i];
                for (int i = da; i < d; ++i) kb.c[i - da] = k.c[i];
                f.at(k) = a.at(ka) * b.at(kb);
            });
            break;
        }
        case Kind::cone_supported: {
            const LatticeCone& cone = *spec.cone;
            f.for_each([&](const MultiIndex& k, const Complex&) {
                f.at(k) = bracket(k, cone.contains(k) ? spec.inside_exp : spec.outside_exp);
            });
            break;
        }
    }
    return f;
}

}  // namespace perdist
