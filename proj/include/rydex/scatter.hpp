#ifndef RYDEX_SCATTER_HPP
#define RYDEX_SCATTER_HPP

#include <complex>
#include <vector>

#include "rydex/params.hpp"
#include "rydex/potential.hpp"

namespace rydex {

using cplx = std::complex<double>;

struct ScatterCoeffs {
    cplx t{1.0, 0.0};
    cplx r{0.0, 0.0};
    double loss() const { return 1.0 - std::norm(t) - std::norm(r); }
};

// Local 2x2 susceptibility of Eq-(3) form: i d/dz (E_du, E_ud)^T = M (E_du, E_ud)^T
// with M = [[chi_down, kappa], [kappa_conj... kappa], [kappa, chi_up]].
// Frequency convention: time dependence exp(+i omega t), so that
// d chi/d omega = +1/v at omega = 0 (slow-light dispersion).
struct SusceptibilityBlock {
    cplx chi_down, chi_up, kappa;
};

// Full susceptibility at (z, omega) by eliminating the four atomic
// amplitudes (P,S for both EIT ladders) from the stationary 6-component
// dynamics; 4x4 linear solve per point. Throws NumericalError if the
// elimination matrix is singular (degenerate EIT, e.g. a vanishing
// control field).
SusceptibilityBlock susceptibility(const SystemParams& p, const Derived& d,
                                   double u_z, double omega);

// U = 0 susceptibility of each decoupled EIT channel (used for the
// co-moving frame and for reconstructing physical output spectra).
cplx free_susceptibility(double gp2, double omega_control, double gamma, double omega);

struct SolveOptions {
    double dz_over_rc = 1.0 / 200.0; // RK4 step
    bool self_check = false;         // re-run with dz/2 and require |dT| < 1e-8
};

// Integrates the co-moving 2x2 ODE across [0, L] (atom at L/2) with input
// (1, 0). The free EIT propagator of each channel is factored out, so
// U == 0 gives exactly (T, R) = (1, 0) and arg T measures only the
// interaction-induced phase.
ScatterCoeffs solve_scattering(const SystemParams& p, const Derived& d, double omega,
                               double r_perp, const SolveOptions& opt = {});

// omega = 0 closed form: T = (Ou^2 e^{-2i phi} + Od^2)/(Od^2+Ou^2),
// R = Ou*Od (e^{-2i phi} - 1)/(Od^2+Ou^2).
ScatterCoeffs coeffs_from_phi(const SystemParams& p, cplx phi);
ScatterCoeffs analytic_coeffs(const SystemParams& p, const Derived& d, double r_perp);

struct PhiResult {
    cplx quadrature;  // phi = (v_up+v_down)/(2 v_up v_down) * int V(z) dz over [0,L]
    cplx closed_form; // (2pi/3) xi [1 - i(5/3) xi] OD_c, or (3pi/8) xi [1 - i(21/32) xi] OD_c
};
PhiResult phi_integral(const SystemParams& p, const Derived& d, double r_perp);

struct Spectrum {
    std::vector<double> omega;     // rad/us, strictly increasing
    std::vector<ScatterCoeffs> coeffs;
    bool band_guard_exceeded = false; // some |omega| above 0.9x EIT bandwidth
};
Spectrum spectrum(const SystemParams& p, const Derived& d,
                  const std::vector<double>& omega_grid, double r_perp,
                  const SolveOptions& opt = {});

// In-band guard: 0.9x the smaller channel EIT bandwidth Omega_mu^2/(gamma sqrt(OD)).
double band_guard(const SystemParams& p, const Derived& d);

struct BeamAverageOptions {
    int rings = 64;
    int angles = 32;
    int radial_nodes = 48;  // 1D solves used to spline T,R over offset
    double rho_max_waists = 3.5;
};

// Transverse average of the 1D coefficients over a Gaussian intensity
// profile exp(-rho^2/w^2) centered at offset r_perp from the atom;
// diffraction neglected so each transverse point scatters independently.
ScatterCoeffs beam_average(const SystemParams& p, const Derived& d, double omega,
                           const BeamAverageOptions& opt = {});

} // namespace rydex

#endif
