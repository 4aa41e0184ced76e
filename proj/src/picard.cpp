#include "sswm/picard.hpp"
#include "sswm/errors.hpp"
#include "sswm/odecore.hpp"
#include "sswm/quad.hpp"

#include <algorithm>
#include <cmath>

namespace sswm {

namespace {

// chi(x) x^2, finite at x = 0 (limit 1)
double chi_x2(double x) {
    if (x == 0.0) return 1.0;
    const double lg = std::log((1.0 - x) / (1.0 + x));
    return (1.0 + 6.0 * x * x * x * lg + 9.0 * x * x) / (1.0 + x * x);
}

// kernels chi/W and theta/W of the rho = 0 integral equation,
// W = -6/(x^2 (1-x^2)); both smooth on [0,1)
double kernel_chi_over_w(double x) {
    return -chi_x2(x) * (1.0 - x * x) / 6.0;
}

double kernel_theta_over_w(double x) {
    return -x * x * x * (1.0 - x * x) / (3.0 * (1.0 + x * x));
}

cplx pow_real_base(double base, cplx z) {
    return std::exp(z * std::log(base));
}

// One application of the rho = 0 map:
//   Ku = theta - theta * I[chi/W Q u] + chi * I[theta/W Q u]
// with I the integral from 0. The derivative uses the differentiated kernels.
void apply_map_zero(cplx lam, const std::vector<double>& xs,
                    const std::vector<cplx>& u, const std::vector<cplx>& up,
                    std::vector<cplx>& ku, std::vector<cplx>& kup) {
    const std::size_t n = xs.size();
    std::vector<cplx> f1(n), f2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = xs[i];
        const cplx q = (x == 0.0) ? cplx(0.0) : q_operator(x, lam, u[i], up[i]);
        f1[i] = kernel_chi_over_w(x) * q;
        f2[i] = kernel_theta_over_w(x) * q;
    }
    const std::vector<cplx> A = cumulative_integral(xs, f1);
    const std::vector<cplx> B = cumulative_integral(xs, f2);
    ku.resize(n);
    kup.resize(n);
    ku[0] = 0.0;
    kup[0] = 2.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double x = xs[i];
        ku[i] = theta(x) - theta(x) * A[i] + chi(x) * B[i];
        kup[i] = theta_prime(x) - theta_prime(x) * A[i] + chi_prime(x) * B[i];
    }
}

// One application of the rho = 1 map in the psi-free form
//   Ku(rho) = 1 + int_rho^1 psi' P,   P(xi) = int_xi^1 q u / psi',
//   (Ku)'   = -psi' P,
// obtained from the variation-of-constants equation by parts; the boundary
// term vanishes for Re lambda > 0. The endpoint weight (1-xi)^(lambda-1)
// sits entirely in P and is integrated analytically.
void apply_map_one(cplx lam, const std::vector<double>& xs,
                   const std::vector<cplx>& u, std::vector<cplx>& ku,
                   std::vector<cplx>& kup) {
    const std::size_t n = xs.size();
    const cplx n_at_1 = lam * (1.0 + lam) - 2.0;
    std::vector<cplx> h2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = xs[i];
        const cplx nx = lam * (1.0 + lam) * x * x + 2.0 * cos2f0(x);
        h2[i] = pow_real_base(1.0 + x, lam - 1.0) * nx * u[i];
    }
    const std::vector<cplx> P = tail_integral_weighted(xs, h2, lam - 1.0);
    std::vector<cplx> F(n);
    for (std::size_t i = 0; i + 1 < n; ++i) F[i] = psi_prime(xs[i], lam) * P[i];
    F[n - 1] = n_at_1 * u[n - 1] / (2.0 * lam); // limit of psi' P at rho = 1
    const std::vector<cplx> T = tail_integral_weighted(xs, F, 0.0);
    ku.resize(n);
    kup.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        ku[i] = 1.0 + T[i];
        kup[i] = -F[i];
    }
}

double sup_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = std::max(s, std::abs(a[i] - b[i]));
    return s;
}

void check_divergence(const std::vector<double>& diffs) {
    const std::size_t n = diffs.size();
    if (n >= 4 && diffs[n - 1] > diffs[n - 2] && diffs[n - 2] > diffs[n - 3] &&
        diffs[n - 3] > diffs[n - 4])
        throw divergence_error(
            "picard: successive differences grew for 3 consecutive iterations");
}

} // namespace

ContractionEstimate contraction_radius_zero(cplx lam) {
    const int n = 951;
    const std::vector<double> xs = clustered_grid(0.0, 0.95, n, 0.0);
    std::vector<cplx> g1(xs.size()), g2(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        g1[i] = std::abs(chi_x2(xs[i])) / 6.0;
        g2[i] = theta(xs[i]) * xs[i] * xs[i] / 6.0;
    }
    const std::vector<cplx> I1 = cumulative_integral(xs, g1);
    const std::vector<cplx> I2 = cumulative_integral(xs, g2);
    std::vector<double> ab(xs.size(), 0.0); // alpha + beta
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double x = xs[i];
        const double alpha = theta(x) * I1[i].real() +
                             std::abs(chi(x)) * I2[i].real();
        const double beta = std::abs(theta_prime(x)) * I1[i].real() +
                            std::abs(chi_prime(x)) * I2[i].real();
        ab[i] = alpha + beta;
    }
    double run_sup = 0.0;
    std::vector<double> sup_to(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        run_sup = std::max(run_sup, ab[i]);
        sup_to[i] = run_sup;
    }
    for (std::size_t j = xs.size(); j-- > 1;) {
        const double rho0 = xs[j];
        const double c = std::max(2.0 * std::abs(lam - 1.0) * rho0,
                                  std::abs(lam * (1.0 + lam) - 2.0));
        const double lip = c * sup_to[j];
        if (lip < 0.9)
            return {rho0, sup_to[j], lip, true};
    }
    throw contraction_error(
        "contraction_radius_zero: no tested interval contracts");
}

ContractionEstimate contraction_radius_one(cplx lam) {
    if (lam.real() <= 0.0)
        throw domain_error("contraction_radius_one: requires Re lambda > 0");
    if (lam.real() >= 1.0)
        throw contraction_error(
            "contraction_radius_one: bound function needs Re lambda < 1 "
            "(psi unbounded at rho = 1 otherwise)");
    const int n = 1201;
    const std::vector<double> xs = clustered_grid(0.5, 1.0, n, 1.0);
    const double relam = lam.real();

    // psi on the grid with base point c = 0.5 (the map itself is c-independent)
    std::vector<cplx> s(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        s[i] = pow_real_base(1.0 + x, -lam) / (x * x);
    }
    const std::vector<cplx> R = tail_integral_weighted(xs, s, -lam);
    std::vector<double> abs_psi(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        abs_psi[i] = std::abs(R[0] - R[i]);

    std::vector<cplx> hb(xs.size()), ha(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const cplx nx = lam * (1.0 + lam) * x * x + 2.0 * cos2f0(x);
        const double mag = std::pow(1.0 + x, relam - 1.0) * std::abs(nx);
        hb[i] = mag;
        ha[i] = mag * abs_psi[i];
    }
    const std::vector<cplx> B =
        tail_integral_weighted(xs, hb, relam - 1.0);
    const std::vector<cplx> A =
        tail_integral_weighted(xs, ha, relam - 1.0);

    std::vector<double> alpha(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        alpha[i] = A[i].real() + abs_psi[i] * B[i].real();

    // sup over [xs[j], 1] is the running max from the right
    double run_sup = 0.0;
    for (std::size_t j = xs.size(); j-- > 0;) {
        run_sup = std::max(run_sup, alpha[j]);
        if (run_sup >= 0.9) {
            if (j + 2 >= xs.size())
                throw contraction_error(
                    "contraction_radius_one: no tested interval contracts");
            const double rho1 = xs[j + 1];
            double sup1 = 0.0;
            for (std::size_t i = j + 1; i < xs.size(); ++i)
                sup1 = std::max(sup1, alpha[i]);
            return {rho1, sup1, sup1, true};
        }
    }
    return {xs[0], run_sup, run_sup, true};
}

PicardRun picard_phi0(cplx lam, double rho0, double tol, int grid_n,
                      int max_iter) {
    if (!(rho0 > 0.0 && rho0 < 1.0))
        throw domain_error("picard_phi0: rho0 must lie in (0,1)");
    PicardRun run;
    run.lam = lam;
    run.a = 0.0;
    run.b = rho0;
    run.grid = clustered_grid(0.0, rho0, grid_n, 0.0);
    const std::size_t n = run.grid.size();
    run.u.resize(n);
    run.up.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        run.u[i] = theta(run.grid[i]);
        run.up[i] = theta_prime(run.grid[i]);
    }
    std::vector<cplx> ku, kup;
    for (int it = 0; it < max_iter; ++it) {
        apply_map_zero(lam, run.grid, run.u, run.up, ku, kup);
        const double d = sup_diff(ku, run.u) + sup_diff(kup, run.up);
        run.diffs.push_back(d);
        run.u = ku;
        run.up = kup;
        ++run.iterations;
        check_divergence(run.diffs);
        if (d < tol) {
            run.converged = true;
            break;
        }
    }
    run.residual = run.diffs.empty() ? 0.0 : run.diffs.back();
    return run;
}

PicardRun picard_phi1(cplx lam, double rho1, double tol, int grid_n,
                      int max_iter) {
    if (!(rho1 > 0.0 && rho1 < 1.0))
        throw domain_error("picard_phi1: rho1 must lie in (0,1)");
    if (lam.real() <= 0.0)
        throw domain_error("picard_phi1: requires Re lambda > 0");
    PicardRun run;
    run.lam = lam;
    run.a = rho1;
    run.b = 1.0;
    run.grid = clustered_grid(rho1, 1.0, grid_n, 1.0);
    const std::size_t n = run.grid.size();
    run.u.assign(n, 1.0);
    run.up.assign(n, 0.0);
    std::vector<cplx> ku, kup;
    for (int it = 0; it < max_iter; ++it) {
        apply_map_one(lam, run.grid, run.u, ku, kup);
        const double d = sup_diff(ku, run.u);
        run.diffs.push_back(d);
        run.u = ku;
        run.up = kup;
        ++run.iterations;
        check_divergence(run.diffs);
        if (d < tol) {
            run.converged = true;
            break;
        }
    }
    run.residual = run.diffs.empty() ? 0.0 : run.diffs.back();
    return run;
}

double integral_equation_residual_zero(cplx lam,
                                       const std::vector<double>& grid,
                                       const std::vector<cplx>& u,
                                       const std::vector<cplx>& up) {
    std::vector<cplx> ku, kup;
    apply_map_zero(lam, grid, u, up, ku, kup);
    return sup_diff(ku, u);
}

} // namespace sswm
