#include "rydex/transport.hpp"

#include <cmath>

#include "rydex/errors.hpp"

namespace rydex {

ShiftKernel make_shift_kernel(double v, double dt, double dz) {
    if (!(v >= 0.0) || !(dt > 0.0) || !(dz > 0.0))
        throw ParameterError("shift kernel requires v >= 0, dt > 0, dz > 0");
    ShiftKernel k;
    k.cells = v * dt / dz;
    k.whole = static_cast<int>(std::floor(k.cells + 1e-12));
    k.frac = k.cells - k.whole;
    if (k.frac < 1e-12) k.frac = 0.0;
    k.exact = k.frac == 0.0;
    if (!k.exact) {
        // quintic Lagrange weights at t = 3 - frac on nodes {0..5}
        const double t = 3.0 - k.frac;
        for (int m = 0; m < 6; ++m) {
            double w = 1.0;
            for (int j = 0; j < 6; ++j) {
                if (j == m) continue;
                w *= (t - j) / (m - j);
            }
            k.w[m] = w;
        }
    }
    return k;
}

cplx FaceHistory::back(double delta) const {
    const int n = static_cast<int>(buf_.size());
    int lo = static_cast<int>(std::floor(delta));
    double f = delta - lo;
    if (lo >= n - 1) return buf_[(head_ + 1) % n]; // oldest available
    auto at = [&](int steps_back) {
        int idx = head_ - steps_back;
        idx %= n;
        if (idx < 0) idx += n;
        return buf_[idx];
    };
    return (1.0 - f) * at(lo) + f * at(lo + 1);
}

void advect(std::span<cplx> dst, std::span<const cplx> src, const ShiftKernel& k,
            const Inflow& inflow, const FaceHistory& hist, double t_old, double dz,
            double v) {
    const int n = static_cast<int>(src.size());
    if (k.exact) {
        for (int i = n - 1; i >= 0; --i) {
            const int m = i - k.whole;
            dst[i] = m >= 0 ? src[m] : inflow(t_old - m * dz / v);
        }
        return;
    }
    // face history distance is measured in time steps
    const double steps_per_cell = 1.0 / k.cells;
    for (int i = 0; i < n; ++i) {
        const int base = i - k.whole - 3;
        cplx acc(0.0);
        if (base >= 0 && base + 5 < n) {
            for (int m = 0; m < 6; ++m) acc += k.w[m] * src[base + m];
        } else {
            for (int m = 0; m < 6; ++m) {
                const int idx = base + m;
                cplx val;
                if (idx >= 0 && idx < n) {
                    val = src[idx];
                } else if (idx < 0) {
                    val = v > 0.0 ? inflow(t_old + (-idx) * dz / v) : cplx(0.0);
                } else {
                    val = hist.back((idx - (n - 1)) * steps_per_cell);
                }
                acc += k.w[m] * val;
            }
        }
        dst[i] = acc;
    }
}

void kick_pair(std::span<cplx> a, std::span<cplx> b, std::span<const double> u,
               double dt) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (u[i] == 0.0) continue;
        const cplx mu = 0.5 * (std::exp(cplx(0.0, -2.0 * u[i] * dt)) - 1.0);
        const cplx s = mu * (a[i] + b[i]);
        a[i] += s;
        b[i] += s;
    }
}

TwoLevelLine::TwoLevelLine(std::vector<double> u, double dz, double dt, double v_down,
                           double v_up)
    : u_(std::move(u)),
      dz_(dz),
      dt_(dt),
      v_down_(v_down),
      v_up_(v_up) {
    const size_t n = u_.size();
    if (n < 8) throw ParameterError("transport grid too small");
    down_.assign(n, cplx(0.0));
    up_.assign(n, cplx(0.0));
    scratch_.assign(n, cplx(0.0));
    k_down_ = make_shift_kernel(v_down_, dt_, dz_);
    k_up_ = make_shift_kernel(v_up_, dt_, dz_);
    u_half_ = u_;
}

void TwoLevelLine::step(double t) {
    kick_pair(down_, up_, u_, 0.5 * dt_);
    static const Inflow no_inflow{};
    advect(scratch_, down_, k_down_, inflow_, hist_down_, t, dz_, v_down_);
    down_.swap(scratch_);
    advect(scratch_, up_, k_up_, no_inflow, hist_up_, t, dz_, v_up_);
    up_.swap(scratch_);
    kick_pair(down_, up_, u_, 0.5 * dt_);
    hist_down_.push(down_.back());
    hist_up_.push(up_.back());
}

double TwoLevelLine::norm() const {
    double s = 0.0;
    const size_t n = down_.size();
    for (size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        s += w * (std::norm(down_[i]) + std::norm(up_[i]));
    }
    return s * dz_;
}

} // namespace rydex
