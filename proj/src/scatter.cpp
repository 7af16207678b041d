#include "rydex/scatter.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "rydex/errors.hpp"
#include "rydex/quadrature.hpp"
#include "rydex/units.hpp"

namespace rydex {

namespace {

struct Channel {
    double gp2, omega_up2, omega_down2, gamma;
};

// Stationary elimination of (P_du, S_du, P_ud, S_ud) at fixed (U, omega),
// time convention exp(+i omega t):
//   (-w + i g) P_d - Od S_d            = gp E_d
//   -Od P_d - (w + U) S_d - U S_u      = 0
//   (-w + i g) P_u - Ou S_u            = gp E_u
//   -Ou P_u - U S_d - (w + U) S_u      = 0
Eigen::Matrix2cd response_matrix(const Channel& ch, double u, double omega) {
    const double od = std::sqrt(ch.omega_down2);
    const double ou = std::sqrt(ch.omega_up2);
    Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
    const cplx diag_p(-omega, ch.gamma);
    a(0, 0) = diag_p;
    a(0, 1) = -od;
    a(1, 0) = -od;
    a(1, 1) = -(omega + u);
    a(1, 3) = -u;
    a(2, 2) = diag_p;
    a(2, 3) = -ou;
    a(3, 2) = -ou;
    a(3, 3) = -(omega + u);
    a(3, 1) = -u;

    Eigen::FullPivLU<Eigen::Matrix4cd> lu(a);
    if (!lu.isInvertible())
        throw NumericalError("singular atomic elimination (degenerate EIT resonance)");
    Eigen::Matrix<cplx, 4, 2> b = Eigen::Matrix<cplx, 4, 2>::Zero();
    const double gp = std::sqrt(ch.gp2);
    b(0, 0) = gp;
    b(2, 1) = gp;
    const Eigen::Matrix<cplx, 4, 2> x = lu.solve(b);

    // i dE/dz = (w/c) E + (gp/c) P
    Eigen::Matrix2cd m;
    const double gp_c = gp / speed_of_light;
    m(0, 0) = omega / speed_of_light + gp_c * x(0, 0);
    m(0, 1) = gp_c * x(0, 1);
    m(1, 0) = gp_c * x(2, 0);
    m(1, 1) = omega / speed_of_light + gp_c * x(2, 1);
    return m;
}

Channel channel_of(const SystemParams& p, const Derived& d) {
    return {d.gp2, p.omega_up * p.omega_up, p.omega_down * p.omega_down, p.gamma};
}

} // namespace

SusceptibilityBlock susceptibility(const SystemParams& p, const Derived& d, double u_z,
                                   double omega) {
    const Eigen::Matrix2cd m = response_matrix(channel_of(p, d), u_z, omega);
    return {m(0, 0), m(1, 1), 0.5 * (m(0, 1) + m(1, 0))};
}

cplx free_susceptibility(double gp2, double omega_control, double gamma, double omega) {
    const double oc2 = omega_control * omega_control;
    return omega / speed_of_light +
           (gp2 / speed_of_light) * omega / cplx(oc2 - omega * omega, gamma * omega);
}

namespace {

ScatterCoeffs integrate_comoving(const SystemParams& p, const Derived& d, double omega,
                                 const PotentialProfile& prof, double dz) {
    const Channel ch = channel_of(p, d);
    const double length = d.length;
    const double zc = 0.5 * length;
    const cplx chi0_down = free_susceptibility(d.gp2, p.omega_down, p.gamma, omega);
    const cplx chi0_up = free_susceptibility(d.gp2, p.omega_up, p.gamma, omega);
    const cplx dchi = chi0_down - chi0_up;
    const cplx i_unit(0.0, 1.0);

    auto rhs = [&](double z, const Eigen::Vector2cd& e) -> Eigen::Vector2cd {
        Eigen::Matrix2cd m = response_matrix(ch, prof.at(z - zc), omega);
        m(0, 0) -= chi0_down;
        m(1, 1) -= chi0_up;
        const cplx mix = std::exp(i_unit * dchi * z);
        m(0, 1) *= mix;
        m(1, 0) /= mix;
        return -i_unit * (m * e);
    };

    const int n = std::max(8, static_cast<int>(std::ceil(length / dz)));
    const double h = length / n;
    Eigen::Vector2cd e(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        const double z = i * h;
        const Eigen::Vector2cd k1 = rhs(z, e);
        const Eigen::Vector2cd k2 = rhs(z + 0.5 * h, e + 0.5 * h * k1);
        const Eigen::Vector2cd k3 = rhs(z + 0.5 * h, e + 0.5 * h * k2);
        const Eigen::Vector2cd k4 = rhs(z + h, e + h * k3);
        e += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(std::abs(e(0))) || !std::isfinite(std::abs(e(1))))
            throw NumericalError("scattering ODE integration failed (non-finite state)");
    }
    return {e(0), e(1)};
}

} // namespace

ScatterCoeffs solve_scattering(const SystemParams& p, const Derived& d, double omega,
                               double r_perp, const SolveOptions& opt) {
    if (!(opt.dz_over_rc > 0.0))
        throw ParameterError("solve option 'dz_over_rc' must be positive");
    const PotentialProfile prof = profile_from(p, d, r_perp);
    const double dz = opt.dz_over_rc * d.rc;
    ScatterCoeffs c = integrate_comoving(p, d, omega, prof, dz);
    if (opt.self_check) {
        const ScatterCoeffs fine = integrate_comoving(p, d, omega, prof, 0.5 * dz);
        if (std::abs(fine.t - c.t) > 1e-8)
            throw NumericalError("scattering ODE self-check failed: step size too coarse");
        c = fine;
    }
    return c;
}

ScatterCoeffs coeffs_from_phi(const SystemParams& p, cplx phi) {
    const double ou2 = p.omega_up * p.omega_up;
    const double od2 = p.omega_down * p.omega_down;
    const cplx e = std::exp(cplx(0.0, -2.0) * phi);
    ScatterCoeffs c;
    c.t = (ou2 * e + od2) / (od2 + ou2);
    c.r = p.omega_up * p.omega_down * (e - 1.0) / (od2 + ou2);
    return c;
}

ScatterCoeffs analytic_coeffs(const SystemParams& p, const Derived& d, double r_perp) {
    SystemParams q = p;
    q.r_perp = r_perp;
    return coeffs_from_phi(p, phi_integral(q, d, r_perp).quadrature);
}

PhiResult phi_integral(const SystemParams& p, const Derived& d, double r_perp) {
    const PotentialProfile prof = profile_from(p, d, r_perp);
    const double zc = 0.5 * d.length;
    const int n0 =
        std::max(64, static_cast<int>(std::ceil(40.0 * d.length / prof.scale)));
    const cplx integral = simpson_converged(
        [&](double z) { return effective_potential_of_u(prof.at(z - zc), d.gamma_eit); },
        0.0, d.length, n0, 1e-10);

    PhiResult res;
    res.quadrature = (d.v_up + d.v_down) / (2.0 * d.v_up * d.v_down) * integral;
    if (p.potential_kind == PotentialKind::Dressed) {
        res.closed_form =
            (two_pi / 3.0) * d.xi * cplx(1.0, -5.0 / 3.0 * d.xi) * p.od_c;
    } else {
        res.closed_form =
            (3.0 * pi / 8.0) * d.xi * cplx(1.0, -21.0 / 32.0 * d.xi) * p.od_c;
    }
    return res;
}

double band_guard(const SystemParams& p, const Derived& d) {
    const double gu = p.omega_up * p.omega_up / (p.gamma * std::sqrt(d.od));
    const double gd = p.omega_down * p.omega_down / (p.gamma * std::sqrt(d.od));
    return 0.9 * std::min(gu, gd);
}

Spectrum spectrum(const SystemParams& p, const Derived& d,
                  const std::vector<double>& omega_grid, double r_perp,
                  const SolveOptions& opt) {
    if (omega_grid.size() < 2)
        throw ParameterError("spectrum grid needs at least two points");
    for (size_t i = 1; i < omega_grid.size(); ++i)
        if (!(omega_grid[i] > omega_grid[i - 1]))
            throw ParameterError("spectrum grid must be strictly increasing");

    Spectrum s;
    s.omega = omega_grid;
    s.coeffs.reserve(omega_grid.size());
    const double guard = band_guard(p, d);
    for (const double w : omega_grid) {
        if (std::abs(w) > guard) s.band_guard_exceeded = true;
        s.coeffs.push_back(solve_scattering(p, d, w, r_perp, opt));
    }
    return s;
}

namespace {

// Catmull-Rom interpolation of tabulated complex values on a uniform grid.
cplx interp_uniform(const std::vector<cplx>& y, double x0, double dx, double x) {
    const int n = static_cast<int>(y.size());
    double u = (x - x0) / dx;
    int j = static_cast<int>(std::floor(u));
    j = std::clamp(j, 0, n - 2);
    const double t = u - j;
    const cplx ym = y[std::max(j - 1, 0)];
    const cplx y0 = y[j];
    const cplx y1 = y[j + 1];
    const cplx y2 = y[std::min(j + 2, n - 1)];
    const cplx a = 0.5 * (y1 - ym);
    const cplx b = 0.5 * (y2 - y0);
    const double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * a +
           (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * b;
}

} // namespace

ScatterCoeffs beam_average(const SystemParams& p, const Derived& d, double omega,
                           const BeamAverageOptions& opt) {
    if (opt.rings < 1 || opt.angles < 1 || opt.radial_nodes < 4)
        throw ParameterError("beam average quadrature counts too small");
    const double w = p.waist;
    if (!(w > 0.0)) throw ParameterError("parameter 'waist' must be positive");

    // Distance of the beam axis from the atom; for the vdW scheme the
    // configured r_perp is a deviation from the nominal separation d_perp.
    const bool vdw = p.potential_kind == PotentialKind::OffDiagonalVdW;
    const double axis = vdw ? d.rc + p.r_perp : p.r_perp;
    const double rho_max = opt.rho_max_waists * w;
    const double r_lo = std::max(0.0, axis - rho_max);
    const double r_hi = axis + rho_max;
    const double dr = (r_hi - r_lo) / (opt.radial_nodes - 1);

    std::vector<cplx> t_tab(opt.radial_nodes), r_tab(opt.radial_nodes);
    for (int i = 0; i < opt.radial_nodes; ++i) {
        const double r_pt = r_lo + i * dr;
        const double arg = vdw ? r_pt - d.rc : r_pt;
        ScatterCoeffs c;
        if (omega == 0.0) {
            c = analytic_coeffs(p, d, arg);
        } else {
            c = solve_scattering(p, d, omega, arg);
        }
        t_tab[i] = c.t;
        r_tab[i] = c.r;
    }

    cplx t_acc = 0.0, r_acc = 0.0;
    double w_acc = 0.0;
    const double drho = rho_max / opt.rings;
    for (int i = 0; i < opt.rings; ++i) {
        const double rho = (i + 0.5) * drho;
        const double ring_w = std::exp(-rho * rho / (w * w)) * rho;
        for (int k = 0; k < opt.angles; ++k) {
            const double th = (k + 0.5) * two_pi / opt.angles;
            const double r_pt =
                std::sqrt(axis * axis + rho * rho + 2.0 * axis * rho * std::cos(th));
            t_acc += ring_w * interp_uniform(t_tab, r_lo, dr, r_pt);
            r_acc += ring_w * interp_uniform(r_tab, r_lo, dr, r_pt);
            w_acc += ring_w;
        }
    }
    return {t_acc / w_acc, r_acc / w_acc};
}

} // namespace rydex
