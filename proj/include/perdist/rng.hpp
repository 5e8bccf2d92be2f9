// rng.hpp
// Deterministic random source for seeded checks. Uses mt19937_64 with an
// explicit uint64 -> double mapping so that identical seeds give
// bit-identical streams on every platform (std::uniform_real_distribution
// makes no such guarantee).

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace perdist {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0,1).
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::complex<double> complex_in_square(double half_width = 1.0) {
        const double re = uniform(-half_width, half_width);
        const double im = uniform(-half_width, half_width);
        return {re, im};
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace perdist
