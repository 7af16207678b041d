#ifndef RYDEX_PARAMS_HPP
#define RYDEX_PARAMS_HPP

#include <optional>
#include <string>

namespace rydex {

// Rydberg dressing of |s> to |r>: either the microscopic knobs
// (Omega, Delta, C6) or the dimensionless ratio xi directly.
// When xi_override is set the other three are ignored and the
// interaction range must be supplied through SystemParams::rc_um.
struct DressingParams {
    double omega = 0.0;  // dressing Rabi frequency (rad/us)
    double delta = 0.0;  // dressing detuning (rad/us)
    double c6 = 0.0;     // vdW coefficient between |r> atoms (rad/us * um^6)
    std::optional<double> xi_override;
};

enum class PotentialKind { Dressed, OffDiagonalVdW };

struct SystemParams {
    double omega_up = 0.0;    // Rydberg-EIT control Rabi frequency (rad/us)
    double omega_down = 0.0;  // Lambda-EIT control Rabi frequency (rad/us)
    double gamma = 0.0;       // intermediate-state half linewidth (rad/us)
    double od_c = 0.0;        // effective optical depth over one range
    DressingParams dressing;
    double rc_um = 0.0;       // interaction range (um); required with xi_override
    double length = 0.0;      // medium length L (um); 0 -> defaults to 4*range
    double r_perp = 0.0;      // transverse offset of beam axis from control atom (um)
    double waist = 2.0;       // beam waist w (um)
    double lambda0 = 0.78;    // optical wavelength (um)
    PotentialKind potential_kind = PotentialKind::Dressed;
    double d_perp = 0.0;      // vdW scheme: control-atom/beam separation (um)
};

struct Derived {
    double u0 = 0.0;          // exchange strength U0 (rad/us)
    double rc = 0.0;          // interaction range: R_c (dressed) or d_perp (vdW), um
    double gp2 = 0.0;         // collective coupling g_p^2 = OD_c*gamma*c/rc
    double v_up = 0.0;        // group velocity c*Omega_up^2/g_p^2 (um/us)
    double v_down = 0.0;
    double gamma_eit = 0.0;   // 2*Ou^2*Od^2/((Od^2+Ou^2)*gamma)
    double xi = 0.0;          // U0/gamma_EIT
    double od = 0.0;          // (L/rc)*OD_c
    double tau = 0.0;         // spin-up EIT delay L/v_up (us)
    double tau_prime = 0.0;   // spin-down EIT delay L/v_down (us)
    double mixing_tan_up = 0.0;   // tan(theta_mu) = g_p/Omega_mu
    double mixing_tan_down = 0.0;
    double eit_bandwidth = 0.0;   // Gamma = Omega_up^2/(gamma*sqrt(OD))
    std::optional<double> n_max;  // (Delta/Omega)^2; absent with xi_override
    double length = 0.0;          // resolved medium length (um)
};

struct FeasibilityReport {
    bool cond_geometry = false;   // w < rc < pi*w^2/lambda0
    double rayleigh = 0.0;        // pi*w^2/lambda0 (um)
    double cond_spinwave = 0.0;   // 4*gamma_s*rc/v_down
    double cond_control = 0.0;    // gamma_c*(dt + 4*rc/v_down)
    std::optional<double> n_max;
};

// Populates all derived quantities; throws ParameterError naming the
// offending field on invalid input.
Derived derive(const SystemParams& p);

FeasibilityReport feasibility(const SystemParams& p, double gamma_s, double gamma_c,
                              double pulse_dt);

} // namespace rydex

#endif
