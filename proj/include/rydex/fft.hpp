#ifndef RYDEX_FFT_HPP
#define RYDEX_FFT_HPP

#include <complex>
#include <vector>

namespace rydex {

// In-place radix-2 FFT, x.size() must be a power of two.
// sign = -1: X_k = sum_n x_n e^{-2pi i nk/N}; sign = +1: inverse kernel
// without the 1/N normalization.
void fft_radix2(std::vector<std::complex<double>>& x, int sign);

} // namespace rydex

#endif
