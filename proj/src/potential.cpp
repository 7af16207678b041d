#include "rydex/potential.hpp"

#include <cmath>

#include "rydex/errors.hpp"
#include "rydex/quadrature.hpp"

namespace rydex {

double PotentialProfile::at(double z) const {
    if (u0 == 0.0) return 0.0;
    if (kind == PotentialKind::Dressed) {
        const double rho2 = (z * z + r_perp * r_perp) / (scale * scale);
        return u0 / (1.0 + rho2 * rho2 * rho2);
    }
    // Off-diagonal vdW: U = U0 / [sqrt(z^2 + r^2)/d_perp]^6 with the actual
    // transverse distance r = d_perp + r_perp (r_perp = deviation).
    const double r = scale + r_perp;
    const double rho2 = (z * z + r * r) / (scale * scale);
    return u0 / (rho2 * rho2 * rho2);
}

PotentialProfile profile_from(const SystemParams& p, const Derived& d) {
    return profile_from(p, d, p.r_perp);
}

PotentialProfile profile_from(const SystemParams& p, const Derived& d, double r_perp) {
    PotentialProfile prof;
    prof.kind = p.potential_kind;
    prof.u0 = d.u0;
    prof.scale = d.rc;
    prof.r_perp = r_perp;
    if (prof.scale <= 0.0) throw ParameterError("potential scale must be positive");
    return prof;
}

namespace {

// >= 40 Simpson points per interaction range, Richardson-checked.
double integrate(const PotentialProfile& prof, double a, double b) {
    if (prof.u0 == 0.0) return 0.0;
    const int n0 = std::max(64, static_cast<int>(std::ceil(40.0 * (b - a) / prof.scale)));
    return simpson_converged([&](double z) { return prof.at(z); }, a, b, n0, 1e-10);
}

} // namespace

double line_integral_medium(const PotentialProfile& prof, double length) {
    if (length <= 0.0) throw ParameterError("medium length must be positive");
    const double zc = 0.5 * length; // control atom at the medium center
    return integrate(prof, -zc, length - zc);
}

double line_integral_infinite(const PotentialProfile& prof) {
    if (prof.u0 == 0.0) return 0.0;
    // Both profiles decay as z^-6; truncate and add the analytic tail.
    const double x = 80.0 * prof.scale;
    const double body = integrate(prof, -x, x);
    const double s = prof.scale;
    const double tail = 2.0 * prof.u0 * std::pow(s, 6.0) / (5.0 * std::pow(x, 5.0));
    return body + tail;
}

std::complex<double> effective_potential_of_u(double u, double gamma_eit) {
    return u / std::complex<double>(1.0, 2.0 * u / gamma_eit);
}

std::complex<double> effective_potential(const SystemParams& p, const Derived& d,
                                         double z) {
    const PotentialProfile prof = profile_from(p, d);
    return effective_potential_of_u(prof.at(z), d.gamma_eit);
}

} // namespace rydex
