#ifndef SSWM_QUAD_HPP
#define SSWM_QUAD_HPP

#include <complex>
#include <functional>
#include <vector>

namespace sswm {

using cplx = std::complex<double>;

struct QuadOptions {
    double abstol = 1e-12;
    double reltol = 1e-10;
    int max_depth = 40;
};

/// Adaptive Gauss-Kronrod 15(7) quadrature of a complex-valued integrand on [a,b].
/// Handles a > b by sign flip. Throws quadrature_error if the tolerance is not met.
cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  const QuadOptions& opts = {});

/// Cumulative integral on a sorted grid of sampled values:
/// out[i] = integral from x[0] to x[i] of the sampled function,
/// computed interval by interval from a local cubic through neighbouring nodes.
std::vector<cplx> cumulative_integral(const std::vector<double>& x,
                                      const std::vector<cplx>& f);

/// Tail integrals with an endpoint power weight:
/// out[i] = integral from x[i] to 1 of (1-s)^mu * h(s) ds,
/// where x is ascending with x.back() == 1 and h is sampled on x (smooth part only;
/// the weight is handled analytically through the substitution t^(1+Re mu)).
/// Requires Re(mu) > -1.
std::vector<cplx> tail_integral_weighted(const std::vector<double>& x,
                                         const std::vector<cplx>& h, cplx mu);

/// Chebyshev-type grid on [a,b] with n points, quadratically clustered toward
/// the endpoint `cluster_at` (must equal a or b).
std::vector<double> clustered_grid(double a, double b, int n, double cluster_at);

} // namespace sswm

#endif
