// fft.hpp
// Thin wrapper over FFTW3 for in-place complex d-dimensional transforms.
// Forward uses the e^{-2 pi i <x,t>} sign convention of the Fourier
// transform used throughout; transforms are unnormalized (inverse of
// forward is size * identity).

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace perdist {

inline void fft_inplace(int dim, const std::array<int, 3>& shape, std::complex<double>* data,
                        bool forward) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("fft_inplace: dim must be 1, 2, or 3");
    int n[3] = {shape[0], shape[1], shape[2]};
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_plan plan =
        fftw_plan_dft(dim, n, p, p, forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fft_inplace: fftw_plan_dft failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

inline void fft_forward(int dim, const std::array<int, 3>& shape, std::vector<std::complex<double>>& v) {
    fft_inplace(dim, shape, v.data(), true);
}

inline void fft_inverse(int dim, const std::array<int, 3>& shape, std::vector<std::complex<double>>& v) {
    fft_inplace(dim, shape, v.data(), false);
}

}  // namespace perdist
