#include "rydex/timedomain.hpp"

#include <algorithm>
#include <cmath>

#include "rydex/errors.hpp"
#include "rydex/fft.hpp"
#include "rydex/potential.hpp"
#include "rydex/transport.hpp"
#include "rydex/units.hpp"

namespace rydex {

FieldTrace synthesize_response(const SystemParams& p, const Derived& d,
                               const PulseShape& pulse, double r_perp,
                               const SynthesisOptions& opt) {
    if (opt.n_fft < 1024 || (opt.n_fft & (opt.n_fft - 1)))
        throw ParameterError("synthesis grid must be a power of two, >= 1024 points");
    if (opt.span_over_dt < 8.0)
        throw NumericalError("synthesis band too narrow: grid must span >= 8/dt");

    const int n = opt.n_fft;
    const double w_max = opt.span_over_dt / pulse.dt;
    const double dw = 2.0 * w_max / n;
    const double length = d.length;
    const cplx iu(0.0, 1.0);

    // physical transfer functions with the channel EIT delay stripped
    std::vector<cplx> t_ret(n), r_ret(n);
    for (int j = 0; j < n; ++j) {
        const double w = (j - n / 2) * dw;
        const ScatterCoeffs c = solve_scattering(p, d, w, r_perp, opt.solve);
        const cplx free_down =
            std::exp(-iu * free_susceptibility(d.gp2, p.omega_down, p.gamma, w) * length);
        const cplx free_up =
            std::exp(-iu * free_susceptibility(d.gp2, p.omega_up, p.gamma, w) * length);
        const cplx hw = pulse.spectrum(w);
        t_ret[j] = c.t * free_down * std::exp(iu * w * d.tau_prime) * hw;
        r_ret[j] = c.r * free_up * std::exp(iu * w * d.tau) * hw;
    }

    // x(t_k) = (dw/2pi) sum_j X_j e^{i w_j t_k}, t_k centered on the pulse
    const double dt_grid = two_pi / (n * dw);
    const double t_min = pulse.t0 - 0.5 * n * dt_grid;
    auto to_time = [&](std::vector<cplx> spec) {
        for (int j = 0; j < n; ++j)
            spec[j] *= std::exp(iu * ((j - n / 2) * dw * t_min));
        fft_radix2(spec, +1);
        for (int k = 0; k < n; ++k) {
            spec[k] *= (dw / two_pi) * ((k % 2) ? -1.0 : 1.0);
        }
        return spec;
    };

    FieldTrace tr;
    tr.tau_down = d.tau_prime;
    tr.tau_up = d.tau;
    tr.out_down = to_time(std::move(t_ret));
    tr.out_up = to_time(std::move(r_ret));
    tr.t_down.resize(n);
    tr.t_up.resize(n);
    for (int k = 0; k < n; ++k) {
        tr.t_down[k] = t_min + k * dt_grid;
        tr.t_up[k] = t_min + k * dt_grid;
    }
    for (int k = 0; k < n; ++k) {
        tr.emitted_down += std::norm(tr.out_down[k]) * dt_grid;
        tr.emitted_up += std::norm(tr.out_up[k]) * dt_grid;
    }
    return tr;
}

FieldTrace evolve_dsp(const SystemParams& p, const Derived& d, const PulseShape& pulse,
                      double r_perp, const DspOptions& opt) {
    if (opt.nz < 16) throw ParameterError("dsp option 'nz' must be >= 16");
    if (!(opt.cfl > 0.0) || opt.cfl > 1.0 + 1e-12)
        throw ParameterError("dsp option 'cfl' must lie in (0, 1]");

    const double length = d.length;
    const double dz = length / opt.nz;
    const double vmax = std::max(d.v_down, d.v_up);
    const double dt = opt.cfl * dz / vmax;
    const PotentialProfile prof = profile_from(p, d, r_perp);

    std::vector<double> u(opt.nz + 1);
    for (int i = 0; i <= opt.nz; ++i) u[i] = prof.at(i * dz - 0.5 * length);

    TwoLevelLine line(u, dz, dt, d.v_down, d.v_up);
    Inflow b{cplx(1.0 / std::sqrt(d.v_down)), &pulse};
    line.set_inflow(b);

    FieldTrace tr;
    tr.tau_down = d.tau_prime;
    tr.tau_up = d.tau;
    const double t_flat = pulse.t0 + 5.0 * pulse.dt + length / std::min(d.v_down, d.v_up);
    const double t_cap = 4.0 * t_flat;
    const double inj0 = pulse.cdf(0.0);

    double t = 0.0;
    while (true) {
        line.step(t);
        t += dt;
        const cplx gd = std::sqrt(d.v_down) * line.face_down();
        const cplx gu = std::sqrt(d.v_up) * line.face_up();
        tr.t_down.push_back(t - d.tau_prime);
        tr.t_up.push_back(t - d.tau);
        tr.out_down.push_back(gd);
        tr.out_up.push_back(gu);
        tr.emitted_down += std::norm(gd) * dt;
        tr.emitted_up += std::norm(gu) * dt;

        const double injected = pulse.cdf(t) - inj0;
        const double defect =
            std::abs(line.norm() + tr.emitted_down + tr.emitted_up - injected);
        tr.norm_defect = std::max(tr.norm_defect, defect);

        if (t > t_flat && line.norm() < opt.stop_norm) break;
        if (t > t_cap)
            throw NumericalError("dsp evolution did not drain the medium in time");
    }
    return tr;
}

double trace_l2_error(const std::vector<double>& ta, const std::vector<cplx>& ga,
                      const std::vector<double>& tb, const std::vector<cplx>& gb) {
    if (ta.size() < 2 || tb.size() < 2)
        throw ParameterError("traces too short to compare");
    auto interp_b = [&](double t) -> cplx {
        if (t <= tb.front() || t >= tb.back()) return cplx(0.0);
        const auto it = std::upper_bound(tb.begin(), tb.end(), t);
        const size_t j = static_cast<size_t>(it - tb.begin());
        const double f = (t - tb[j - 1]) / (tb[j] - tb[j - 1]);
        return (1.0 - f) * gb[j - 1] + f * gb[j];
    };
    double num = 0.0, den = 0.0;
    for (size_t k = 0; k + 1 < ta.size(); ++k) {
        const double w = ta[k + 1] - ta[k];
        num += w * std::norm(ga[k] - interp_b(ta[k]));
        den += w * std::norm(ga[k]);
    }
    if (den <= 0.0) throw NumericalError("empty reference trace in comparison");
    return std::sqrt(num / den);
}

double shape_overlap(const std::vector<double>& t, const std::vector<cplx>& g,
                     const PulseShape& ref) {
    double w2 = 0.0, centroid = 0.0;
    for (size_t k = 0; k + 1 < t.size(); ++k) {
        const double w = (t[k + 1] - t[k]) * std::norm(g[k]);
        w2 += w;
        centroid += w * t[k];
    }
    if (w2 <= 0.0) return 0.0;
    centroid /= w2;
    PulseShape centered = ref;
    centered.t0 = centroid;
    cplx ov(0.0);
    double nr = 0.0;
    for (size_t k = 0; k + 1 < t.size(); ++k) {
        const double w = t[k + 1] - t[k];
        const double hv = centered.h(t[k]);
        ov += w * std::conj(g[k]) * hv;
        nr += w * hv * hv;
    }
    return std::norm(ov) / (w2 * nr);
}

} // namespace rydex
