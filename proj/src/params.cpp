#include "rydex/params.hpp"

#include <cmath>

#include "rydex/errors.hpp"
#include "rydex/units.hpp"

namespace rydex {

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ParameterError(std::string("parameter '") + field +
                             "' must be strictly positive and finite");
    }
}

} // namespace

Derived derive(const SystemParams& p) {
    require_positive(p.omega_up, "omega_up");
    require_positive(p.omega_down, "omega_down");
    require_positive(p.gamma, "gamma");
    require_positive(p.od_c, "od_c");

    Derived d;
    if (p.dressing.xi_override) {
        if (*p.dressing.xi_override < 0.0)
            throw ParameterError("parameter 'dressing.xi' must be non-negative");
        require_positive(p.rc_um, "rc_um");
        d.rc = p.rc_um;
    } else {
        require_positive(p.dressing.omega, "dressing.omega");
        require_positive(p.dressing.delta, "dressing.delta");
        require_positive(p.dressing.c6, "dressing.c6");
        if (p.dressing.omega >= p.dressing.delta)
            throw ParameterError(
                "parameter 'dressing.omega' must be below 'dressing.delta' "
                "(large-detuning regime)");
        d.u0 = p.dressing.omega * p.dressing.omega / p.dressing.delta;
        d.rc = std::pow(p.dressing.c6 / p.dressing.delta, 1.0 / 6.0);
        d.n_max = std::pow(p.dressing.delta / p.dressing.omega, 2.0);
    }
    if (p.potential_kind == PotentialKind::OffDiagonalVdW) {
        require_positive(p.d_perp, "d_perp");
        // OD_c in the vdW scheme is referred to d_perp instead of R_c.
        d.rc = p.d_perp;
        d.n_max.reset();
    }

    const double ou2 = p.omega_up * p.omega_up;
    const double od2 = p.omega_down * p.omega_down;
    d.gamma_eit = 2.0 * ou2 * od2 / ((ou2 + od2) * p.gamma);
    if (p.dressing.xi_override) d.u0 = *p.dressing.xi_override * d.gamma_eit;

    d.gp2 = p.od_c * p.gamma * speed_of_light / d.rc;
    d.v_up = speed_of_light * ou2 / d.gp2;
    d.v_down = speed_of_light * od2 / d.gp2;
    d.xi = d.u0 / d.gamma_eit;
    d.length = p.length > 0.0 ? p.length : 4.0 * d.rc;
    if (p.length < 0.0) throw ParameterError("parameter 'length' must be positive");
    d.od = d.length / d.rc * p.od_c;
    d.tau = d.length / d.v_up;
    d.tau_prime = d.length / d.v_down;
    d.mixing_tan_up = std::sqrt(d.gp2) / p.omega_up;
    d.mixing_tan_down = std::sqrt(d.gp2) / p.omega_down;
    d.eit_bandwidth = ou2 / (p.gamma * std::sqrt(d.od));
    return d;
}

FeasibilityReport feasibility(const SystemParams& p, double gamma_s, double gamma_c,
                              double pulse_dt) {
    if (gamma_s < 0.0) throw ParameterError("parameter 'gamma_s' must be non-negative");
    if (gamma_c < 0.0) throw ParameterError("parameter 'gamma_c' must be non-negative");
    if (pulse_dt < 0.0) throw ParameterError("parameter 'pulse_dt' must be non-negative");
    const Derived d = derive(p);

    FeasibilityReport r;
    r.rayleigh = pi * p.waist * p.waist / p.lambda0;
    r.cond_geometry = p.waist < d.rc && d.rc < r.rayleigh;
    r.cond_spinwave = 4.0 * gamma_s * d.rc / d.v_down;
    r.cond_control = gamma_c * (pulse_dt + 4.0 * d.rc / d.v_down);
    r.n_max = d.n_max;
    return r;
}

} // namespace rydex
