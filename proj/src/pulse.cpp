#include "rydex/pulse.hpp"

#include <cmath>

#include "rydex/units.hpp"

namespace rydex {

double PulseShape::h(double t) const {
    const double s = (t - t0) / dt;
    return std::pow(pi * dt * dt, -0.25) * std::exp(-0.5 * s * s);
}

double PulseShape::cdf(double u) const {
    return 0.5 * (1.0 + std::erf((u - t0) / dt));
}

double PulseShape::amplitude_cdf(double u) const {
    const double norm = std::pow(pi * dt * dt, -0.25) * std::sqrt(two_pi) * dt;
    return norm * 0.5 * (1.0 + std::erf((u - t0) / (std::sqrt(2.0) * dt)));
}

std::complex<double> PulseShape::spectrum(double omega) const {
    const double mag =
        std::pow(4.0 * pi * dt * dt, 0.25) * std::exp(-0.5 * omega * omega * dt * dt);
    return mag * std::exp(std::complex<double>(0.0, -omega * t0));
}

} // namespace rydex
