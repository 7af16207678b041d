#ifndef RYDEX_POTENTIAL_HPP
#define RYDEX_POTENTIAL_HPP

#include <complex>

#include "rydex/params.hpp"

namespace rydex {

// Real exchange potential along the beam axis. z is measured from the
// control atom; r_perp is the transverse offset of the axis. For the vdW
// scheme r_perp is the deviation from the nominal separation d_perp.
struct PotentialProfile {
    PotentialKind kind = PotentialKind::Dressed;
    double u0 = 0.0;      // rad/us
    double scale = 0.0;   // R_c (dressed) or d_perp (vdW), um
    double r_perp = 0.0;  // um

    double at(double z) const;
};

PotentialProfile profile_from(const SystemParams& p, const Derived& d);
PotentialProfile profile_from(const SystemParams& p, const Derived& d, double r_perp);

// Integral of U(z) dz. Medium variant integrates z in [0, L] with the atom
// at L/2; the infinite variant covers the whole line. Relative accuracy 1e-8.
double line_integral_medium(const PotentialProfile& prof, double length);
double line_integral_infinite(const PotentialProfile& prof);

// Complex effective potential V(z) = U/[1 + i*gamma*U*(Od^2+Ou^2)/(Od^2*Ou^2)];
// Im V <= 0 (pure damping).
std::complex<double> effective_potential(const SystemParams& p, const Derived& d,
                                         double z);
std::complex<double> effective_potential_of_u(double u, double gamma_eit);

} // namespace rydex

#endif
