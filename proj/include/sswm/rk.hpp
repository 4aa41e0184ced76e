#ifndef SSWM_RK_HPP
#define SSWM_RK_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <vector>

#include "sswm/errors.hpp"

namespace sswm {

using cplx = std::complex<double>;
using State2 = std::array<cplx, 2>;

struct OdeOptions {
    double reltol = 1e-11;
    double abstol = 1e-13;
    long max_steps = 4000000;
};

// Adaptive Dormand-Prince 5(4) for a two-component complex system.
// Integrates from x0 to x1 in either direction, clamping the final step so
// the endpoint is hit exactly.
template <class RHS>
State2 integrate_ode(RHS&& f, double x0, double x1, State2 y,
                     const OdeOptions& opts = {}) {
    if (x0 == x1) return y;
    const double dir = (x1 > x0) ? 1.0 : -1.0;

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // difference between 5th and embedded 4th order weights
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    double x = x0;
    double h = dir * std::min(1e-3, std::abs(x1 - x0));
    State2 k1 = f(x, y);
    long steps = 0;

    while (dir * (x1 - x) > 0.0) {
        if (++steps > opts.max_steps)
            throw integrator_error("integrate_ode: step limit exceeded");
        if (dir * (x + h) > dir * x1) h = x1 - x;
        if (std::abs(h) < 1e-15 * (std::abs(x) + 1.0))
            throw integrator_error("integrate_ode: step size underflow");

        State2 t;
        for (int i = 0; i < 2; ++i) t[i] = y[i] + h * a21 * k1[i];
        State2 k2 = f(x + c2 * h, t);
        for (int i = 0; i < 2; ++i)
            t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        State2 k3 = f(x + c3 * h, t);
        for (int i = 0; i < 2; ++i)
            t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        State2 k4 = f(x + c4 * h, t);
        for (int i = 0; i < 2; ++i)
            t[i] = y[i] +
                   h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        State2 k5 = f(x + c5 * h, t);
        for (int i = 0; i < 2; ++i)
            t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                               a64 * k4[i] + a65 * k5[i]);
        State2 k6 = f(x + h, t);
        State2 y5;
        for (int i = 0; i < 2; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                b5 * k5[i] + b6 * k6[i]);
        State2 k7 = f(x + h, y5);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc =
                opts.abstol +
                opts.reltol * std::max(std::abs(y[i]), std::abs(y5[i]));
            const double r = std::abs(e) / sc;
            err = std::max(err, r);
        }

        if (err <= 1.0) {
            x += h;
            y = y5;
            k1 = k7; // FSAL
        }
        const double fac =
            std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-16),
                                                       -0.2)));
        h *= fac;
    }
    return y;
}

// Integrate and record the state at each target abscissa. Targets must be
// ordered monotonically in the direction of integration, starting at x0.
template <class RHS, class Sink>
void integrate_path(RHS&& f, double x0, const std::vector<double>& targets,
                    State2 y, Sink&& sink, const OdeOptions& opts = {}) {
    double x = x0;
    for (double xt : targets) {
        y = integrate_ode(f, x, xt, y, opts);
        x = xt;
        sink(xt, y);
    }
}

} // namespace sswm

#endif
