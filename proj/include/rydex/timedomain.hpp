#ifndef RYDEX_TIMEDOMAIN_HPP
#define RYDEX_TIMEDOMAIN_HPP

#include <complex>
#include <vector>

#include "rydex/params.hpp"
#include "rydex/pulse.hpp"
#include "rydex/scatter.hpp"

namespace rydex {

// Output amplitudes g_mu(t) = sqrt(v_mu) psi_mu(L, t): int |g|^2 dt is the
// channel probability. Times are reported in the retarded frame of each
// channel (EIT delays tau, tau' subtracted).
struct FieldTrace {
    std::vector<double> t_down, t_up;
    std::vector<cplx> out_down, out_up;
    double tau_down = 0.0, tau_up = 0.0;
    double emitted_down = 0.0, emitted_up = 0.0;
    double norm_defect = 0.0; // max |in-medium + emitted - injected|
};

struct SynthesisOptions {
    int n_fft = 4096;          // >= 1024, power of two
    double span_over_dt = 8.0; // grid covers +- span/dt
    SolveOptions solve;
};

// Full-model response: multiply the input spectrum by the physical T(w), R(w)
// of the frequency-domain solver and inverse-transform. Exact for a linear
// single-photon problem.
FieldTrace synthesize_response(const SystemParams& p, const Derived& d,
                               const PulseShape& pulse, double r_perp,
                               const SynthesisOptions& opt = {});

struct DspOptions {
    int nz = 400;      // grid cells across [0, L]
    double cfl = 0.9;  // dt = cfl * dz / max(v); must be <= 1
    double stop_norm = 1e-10;
};

// Direct time stepping of the two-component DSP transport (semi-Lagrangian
// advection + exact local exchange rotations).
FieldTrace evolve_dsp(const SystemParams& p, const Derived& d, const PulseShape& pulse,
                      double r_perp, const DspOptions& opt = {});

// Relative L2 distance between channel traces (b interpolated onto a's grid,
// normalized by a's L2 norm over the overlap).
double trace_l2_error(const std::vector<double>& ta, const std::vector<cplx>& ga,
                      const std::vector<double>& tb, const std::vector<cplx>& gb);

// Squared overlap |<g, h>|^2 / (|g|^2 |h|^2) between a trace and a reference
// pulse shape centered at the trace's peak envelope (shape comparison only).
double shape_overlap(const std::vector<double>& t, const std::vector<cplx>& g,
                     const PulseShape& ref);

} // namespace rydex

#endif
