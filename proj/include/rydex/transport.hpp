#ifndef RYDEX_TRANSPORT_HPP
#define RYDEX_TRANSPORT_HPP

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "rydex/pulse.hpp"

namespace rydex {

using cplx = std::complex<double>;

// Semi-Lagrangian shift of one advection sub-step: displacement
// s = v dt / dz cells, split into an integer part and a quintic
// Lagrange interpolation at constant fraction. frac == 0 degenerates
// to an exact grid shift.
struct ShiftKernel {
    int whole = 0;
    double frac = 0.0;
    bool exact = true;
    std::array<double, 6> w{}; // weights for nodes jf-3 .. jf+2, jf = i - whole
    double cells = 0.0;        // s in cells
};

ShiftKernel make_shift_kernel(double v, double dt, double dz);

// Ring buffer of recent outflow-face samples, used as upstream data for
// stencil points that lie beyond the exit face.
class FaceHistory {
public:
    explicit FaceHistory(int capacity = 8) : buf_(capacity, cplx(0.0)) {}
    void push(cplx v) {
        head_ = (head_ + 1) % static_cast<int>(buf_.size());
        buf_[head_] = v;
    }
    // value delta steps before the most recent sample (linear in delta)
    cplx back(double delta) const;

private:
    std::vector<cplx> buf_;
    int head_ = 0;
};

// Inflow boundary signal b(t) = coef * h(t) entering at z = 0.
struct Inflow {
    cplx coef{0.0};
    const PulseShape* pulse = nullptr;
    cplx operator()(double t) const { return pulse ? coef * pulse->h(t) : cplx(0.0); }
};

// dst[i] = field value at z_i - s, taking inflow characteristics from
// b(t) at z <= 0 and already-exited content from the face history.
// dst and src must be distinct, same size.
void advect(std::span<cplx> dst, std::span<const cplx> src, const ShiftKernel& k,
            const Inflow& inflow, const FaceHistory& hist, double t_old, double dz,
            double v);

// Exact local exchange rotation exp(-i theta [[1,1],[1,1]]) applied pointwise:
// theta_i = u[i] * dt.
void kick_pair(std::span<cplx> a, std::span<cplx> b, std::span<const double> u,
               double dt);

// Single-excitation transport of the DSP Hamiltonian on z in [0, L]:
// components (photon down, atom up) and (photon up, atom down), advected at
// v_down / v_up, exchange-coupled by U(z). Strang split: half kick, advect,
// half kick.
class TwoLevelLine {
public:
    TwoLevelLine(std::vector<double> u, double dz, double dt, double v_down,
                 double v_up);

    void set_inflow(const Inflow& b) { inflow_ = b; }
    // advance from t to t+dt; returns nothing, face values query-able after
    void step(double t);

    std::span<const cplx> down() const { return down_; }
    std::span<const cplx> up() const { return up_; }
    std::span<cplx> down() { return down_; }
    std::span<cplx> up() { return up_; }
    cplx face_down() const { return down_.back(); }
    cplx face_up() const { return up_.back(); }
    double norm() const; // trapezoid of |down|^2 + |up|^2
    double dz() const { return dz_; }
    double dt() const { return dt_; }
    double v_down() const { return v_down_; }
    double v_up() const { return v_up_; }

private:
    std::vector<double> u_, u_half_;
    std::vector<cplx> down_, up_, scratch_;
    ShiftKernel k_down_, k_up_;
    FaceHistory hist_down_, hist_up_;
    Inflow inflow_;
    double dz_, dt_, v_down_, v_up_;
};

} // namespace rydex

#endif
