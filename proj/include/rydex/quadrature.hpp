#ifndef RYDEX_QUADRATURE_HPP
#define RYDEX_QUADRATURE_HPP

#include <cmath>
#include <complex>

#include "rydex/errors.hpp"

namespace rydex {

// Composite Simpson on [a, b] with n intervals (n forced even).
template <class F>
auto simpson(F&& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    using R = decltype(f(a));
    R acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

// Simpson refined until two successive doublings agree to rel_tol
// (Richardson-style check). Throws NumericalError if the cap is hit.
template <class F>
auto simpson_converged(F&& f, double a, double b, int n0, double rel_tol,
                       int max_doublings = 12) {
    auto prev = simpson(f, a, b, n0);
    for (int k = 1; k <= max_doublings; ++k) {
        n0 *= 2;
        auto cur = simpson(f, a, b, n0);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= rel_tol * scale + 1e-300) return cur;
        prev = cur;
    }
    throw NumericalError("quadrature did not converge to requested tolerance");
}

} // namespace rydex

#endif
