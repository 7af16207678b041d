#ifndef RYDEX_PULSE_HPP
#define RYDEX_PULSE_HPP

#include <complex>

namespace rydex {

// Gaussian temporal mode h(t), normalized as int h^2 dt = 1:
//   h(t) = (pi dt^2)^(-1/4) exp(-(t-t0)^2 / (2 dt^2)),
// frequency-domain amplitude proportional to exp(-(w dt)^2/2).
struct PulseShape {
    double dt = 1.0;  // temporal width (us)
    double t0 = 0.0;  // center (us)

    double h(double t) const;
    // F(u) = int_{-inf}^u h^2, exact via erf.
    double cdf(double u) const;
    // int_{-inf}^u h (amplitude integral), exact via erf.
    double amplitude_cdf(double u) const;
    // spectrum under X(w) = int x(t) e^{-iwt} dt
    std::complex<double> spectrum(double omega) const;
};

} // namespace rydex

#endif
