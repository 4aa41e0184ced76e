// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <vector>

#include "sswm/connection.hpp"
#include "sswm/frobenius.hpp"
#include "sswm/odecore.hpp"
#include "sswm/picard.hpp"
#include "sswm/quad.hpp"
#include "sswm/stability.hpp"

using namespace sswm;

namespace {

int failures = 0;

void report(int num, bool pass, const char* text, double worst) {
    std::printf("%s criterion %2d: %s (worst %.3e)\n", pass ? "PASS" : "FAIL",
                num, text, worst);
    if (!pass) ++failures;
}

std::vector<double> uniform(double a, double b, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1);
    return g;
}

// 1. gauge eigenvalue found by the real scan
void criterion1() {
    const ScanReport r = scan_real(0.9, 1.1, 41);
    const double m1 = std::abs(miss(1.0).miss);
    const bool pass = r.roots.size() == 1 &&
                      std::abs(r.roots[0].lam - 1.0) < 1e-6 && m1 < 1e-8;
    report(1, pass, "gauge eigenvalue at lambda = 1 in [0.9,1.1]",
           r.roots.empty() ? 1.0 : std::abs(r.roots[0].lam - 1.0) + m1);
}

// 2. no roots on (0,1); invariant under the matching point
void criterion2() {
    std::size_t counts[3];
    int i = 0;
    for (double rm : {0.5, 0.4, 0.6}) {
        ShootingConfig cfg;
        cfg.match_point = rm;
        counts[i++] = scan_real(0.05, 0.95, 181, cfg).roots.size();
    }
    const bool pass = counts[0] == 0 && counts[1] == 0 && counts[2] == 0;
    report(2, pass, "no eigenvalues on [0.05,0.95], any matching point",
           static_cast<double>(counts[0] + counts[1] + counts[2]));
}

// 3. no roots on (1,3]
void criterion3() {
    const ScanReport r = scan_real(1.05, 3.0, 100);
    report(3, r.roots.empty(), "no eigenvalues on [1.05,3.0]",
           static_cast<double>(r.roots.size()));
}

// 4. closed forms solve the lambda = 1 pencil; Wronskian identity
void criterion4() {
    double worst = 0.0, worst_w = 0.0;
    for (double x : uniform(0.01, 0.99, 393)) {
        const double om = 1.0 - x * x;
        const double p = 2.0 / x - 2.0 * x / om;
        const double r = 2.0 * cos2f0(x) / (x * x * om) + 2.0 / om;
        const double st =
            std::max({1.0, std::abs(theta_second(x)),
                      std::abs(p * theta_prime(x)), std::abs(r * theta(x))});
        const double sc =
            std::max({1.0, std::abs(chi_second(x)),
                      std::abs(p * chi_prime(x)), std::abs(r * chi(x))});
        worst = std::max(
            worst,
            std::abs(theta_second(x) + p * theta_prime(x) - r * theta(x)) /
                st);
        worst = std::max(
            worst,
            std::abs(chi_second(x) + p * chi_prime(x) - r * chi(x)) / sc);
        const double w = theta(x) * chi_prime(x) - theta_prime(x) * chi(x);
        worst_w = std::max(worst_w, std::abs(w - wronskian_theta_chi(x)) /
                                        std::abs(wronskian_theta_chi(x)));
    }
    report(4, worst < 1e-10 && worst_w < 1e-12,
           "theta, chi pencil residuals and Wronskian closed form",
           std::max(worst, worst_w));
}

// 5. Picard fixed points vs shooting; contraction of the differences
void criterion5() {
    double worst = 0.0, worst_ratio_excess = -1.0;
    bool pass = true;
    for (double lam : {0.25, 0.5, 0.75}) {
        const ContractionEstimate c0 = contraction_radius_zero(lam);
        const PicardRun r0 = picard_phi0(lam, c0.endpoint);
        pass = pass && r0.converged;
        for (std::size_t i = 40; i < r0.grid.size(); i += 98) {
            const Solution s = phi0_at(lam, r0.grid[i]);
            worst = std::max(worst, std::abs(s.u - r0.u[i]));
        }
        for (std::size_t i = 1; i + 1 < r0.diffs.size(); ++i)
            worst_ratio_excess =
                std::max(worst_ratio_excess, r0.diffs[i] / r0.diffs[i - 1] -
                                                 (c0.lipschitz + 0.05));

        const ContractionEstimate c1 = contraction_radius_one(lam);
        const PicardRun r1 = picard_phi1(lam, c1.endpoint);
        pass = pass && r1.converged;
        for (std::size_t i = 8; i + 8 < r1.grid.size(); i += 98) {
            const Solution s = phi1_at(lam, r1.grid[i]);
            worst = std::max(worst, std::abs(s.u - r1.u[i]));
        }
        for (std::size_t i = 1; i + 1 < r1.diffs.size(); ++i)
            worst_ratio_excess =
                std::max(worst_ratio_excess, r1.diffs[i] / r1.diffs[i - 1] -
                                                 (c1.lipschitz + 0.05));
    }
    pass = pass && worst <= 1e-8 && worst_ratio_excess < 0.0;
    report(5, pass, "Picard fixed points match shooting, contractive rates",
           worst);
}

// 6. Frobenius data: theta Taylor series and the regularity condition
void criterion6() {
    double worst = 0.0;
    const SeriesExpansion s0 = series_phi0(1.0, 24);
    for (int k = 0; k <= 20; ++k) {
        double expect = 0.0;
        if (k % 2 == 0) expect = (k % 4 == 0) ? 2.0 : -2.0;
        worst = std::max(worst,
                         std::abs(s0.coeff[static_cast<std::size_t>(k)] -
                                  expect));
    }
    bool pass = worst < 1e-13;
    double worst_reg = 0.0;
    for (double lam = 0.1; lam < 0.95; lam += 0.1) {
        const auto [u1, up1] = series_phi1(lam).eval(1.0);
        worst_reg = std::max(
            worst_reg,
            std::abs(up1 - (2.0 - lam - lam * lam) / (2.0 * lam) * u1));
    }
    pass = pass && worst_reg < 1e-12;
    report(6, pass, "series coefficients and phi1'(1) closed form",
           std::max(worst, worst_reg));
}

// 7. positivity of phi0 for 20 real lambda values
void criterion7() {
    const auto grid = uniform(1e-3, 1.0 - 1e-3, 401);
    double worst = 1e300;
    bool pass = true;
    for (int j = 0; j < 20; ++j) {
        const double lam = 0.05 + j * 0.1; // 0.05 .. 1.95, skips 1 exactly
        const PositivityVerdict v = check_positivity(lam, grid);
        pass = pass && v.pass;
        worst = std::min(worst, v.min_value);
    }
    report(7, pass, "phi0 > 0 on [1e-3, 1-1e-3] for 20 lambda in (0,2)",
           worst);
}

// 8. second-derivative identity at critical points; single beta sign change
void criterion8() {
    bool pass = true;
    double worst = 0.0;
    ShootingConfig cfg;
    cfg.reltol = 1e-12;
    cfg.abstol = 1e-14;
    for (double lam : {0.3, 0.5, 0.7}) {
        pass = pass && beta_sign_changes(lam) == 1;
        for (int side = 0; side < 2; ++side) {
            const auto grid = uniform(0.05, 1.0 - 1e-3, 601);
            const auto prof = side == 0 ? phi0_profile(lam, grid, cfg)
                                        : phi1_profile(lam, grid, cfg);
            std::vector<double> u(grid.size()), up(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                u[i] = prof[i].u.real();
                up[i] = prof[i].up.real();
            }
            const SignArgumentVerdict v =
                theorem_sign_argument(lam, grid, u, up);
            pass = pass && v.pass;
            worst = std::max(worst, v.max_identity_residual);
        }
    }
    report(8, pass, "u'' = beta u at critical points; one beta sign change",
           worst);
}

// 9. weighted-norm classification with agreeing methods
void criterion9() {
    bool pass = true;
    double worst = 0.0;
    try {
        for (double lam : {0.25, 0.5, 1.0}) {
            const WeightedNormReport r = weighted_norm_classification(lam);
            pass = pass && r.by_exponent == NormClass::divergent &&
                   r.by_quadrature == NormClass::divergent;
        }
        for (double lam : {1.5, 2.0}) {
            const WeightedNormReport r = weighted_norm_classification(lam);
            pass = pass && r.by_exponent == NormClass::integrable &&
                   r.by_quadrature == NormClass::integrable;
            worst = std::max(worst, std::abs(r.window_ratio -
                                             std::pow(2.0, 1.0 - lam)));
        }
    } catch (const std::exception&) {
        pass = false;
    }
    report(9, pass, "weighted-norm classification, both methods agree",
           worst);
}

// 10. wave-equation residual of the mode ansatz
void criterion10() {
    const auto grid = uniform(0.05, 0.95, 301);
    double worst = 0.0;
    for (double lam : {0.5, 1.0, 2.2}) {
        const auto prof = phi0_profile(lam, grid);
        std::vector<cplx> u(grid.size()), up(grid.size()), upp(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            u[i] = prof[i].u;
            up[i] = prof[i].up;
            upp[i] = lam == 1.0 ? cplx(theta_second(grid[i]))
                                : pencil_second_derivative(grid[i], lam, u[i],
                                                           up[i]);
        }
        worst = std::max(worst, pde_residual(lam, grid, u, up, upp));
    }
    report(10, worst < 1e-8, "wave-equation residual of e^(lam tau) u",
           worst);
}

// 11. winding numbers over complex rectangles
void criterion11() {
    const int w1 = scan_complex({0.5, 1.5, -0.5, 0.5}, 40);
    const int w0 = scan_complex({0.1, 0.9, -0.5, 0.5}, 40);
    report(11, w1 == 1 && w0 == 0,
           "winding 1 around the gauge mode, 0 on (0.1,0.9) strip",
           std::abs(w1 - 1) + std::abs(w0));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) std::printf("%d criteria FAILED\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures ? 1 : 0;
}
