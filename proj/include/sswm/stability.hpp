#ifndef SSWM_STABILITY_HPP
#define SSWM_STABILITY_HPP

#include <string>
#include <vector>

#include "sswm/connection.hpp"

namespace sswm {

// Certificate layer: executable renderings of the positivity lemma, the
// integral identity, the derivative sign-change lemma, the regularity
// condition at rho = 1, the sign argument behind the nonexistence theorem,
// the weighted-norm integrability remark, and the wave-equation residual.

struct PositivityVerdict {
    bool pass = false;
    double min_value = 0.0;
    double arg_min = 0.0;  // rho attaining the minimum (first violation if fail)
};

/// Minimum of the analytic-at-0 solution over a real grid in (0,1);
/// passes iff it stays strictly positive. lambda real.
PositivityVerdict check_positivity(double lam, const std::vector<double>& grid,
                                   const ShootingConfig& cfg = {});

/// Quadrature value of the identity integral
///   int_0^1 (theta / W(theta,chi)) Q_lambda u drho
/// for a sampled u, u' on an ascending grid covering [0,1]. The integrand
/// is evaluated in its endpoint-regular form; for a genuine regular
/// eigenfunction the value is 0.
cplx integral_identity(cplx lam, const std::vector<double>& grid,
                       const std::vector<cplx>& u, const std::vector<cplx>& up);

/// Sign-change locations of a sampled derivative, refined by bisection on a
/// local cubic interpolant. Empty list allowed.
std::vector<double> derivative_sign_change(const std::vector<double>& grid,
                                           const std::vector<double>& up);

/// Residual |u'(1) - (2 - lambda - lambda^2)/(2 lambda) u(1)| of the
/// regularity condition at rho = 1. Throws domain_error at lambda = 0.
double regularity_condition(cplx lam, cplx u1, cplx up1);

struct SignArgumentVerdict {
    bool pass = false;
    std::vector<double> critical_points;  // interior zeros of u'
    double max_identity_residual = 0.0;   // sup |u'' - beta u| over criticals
    int beta_sign_changes = 0;            // of beta_lambda on (0,1)
    double beta_root = 0.0;               // its unique zero (lambda in (0,1))
};

/// Mechanism check of the nonexistence proof on a sampled real solution:
/// at every interior critical point rho_c the second derivative (recovered
/// by local polynomial differentiation of the u' samples, independent of
/// the ODE) must satisfy u'' = beta_lambda u to `tol`, and for positive u
/// beyond the beta root its sign must match beta * u. lambda in (0,1).
SignArgumentVerdict theorem_sign_argument(double lam,
                                          const std::vector<double>& grid,
                                          const std::vector<double>& u,
                                          const std::vector<double>& up,
                                          double tol = 1e-8);

enum class NormClass { integrable, divergent };

struct WeightedNormReport {
    NormClass by_exponent;
    NormClass by_quadrature;
    double tail_exponent = 0.0;  // lambda - 2
    double window_ratio = 0.0;   // dyadic-window quadrature ratio, -> 2^(1-lambda)
};

/// Whether rho (1-rho^2)^(lambda/2) phi1 is square integrable against
/// drho/(1-rho^2)^2: by the tail exponent (integrable iff lambda > 1) and,
/// independently, by dyadic-window quadrature growth near rho = 1. Throws
/// inconclusive_error if lambda is within 1e-3 of 1 (but not exactly 1) or
/// if the two methods disagree. Requires lambda > 0.
WeightedNormReport weighted_norm_classification(double lam);

/// Sup over the grid of the wave-equation residual of w = e^(lambda tau) u
/// at tau = 0:
///   lambda^2 u + lambda u + 2 lambda rho u' - (1-rho^2) u''
///   - 2 (1-rho^2) u'/rho + 2 cos(2 f0) u / rho^2.
/// Grid points must lie in (0,1).
double pde_residual(cplx lam, const std::vector<double>& grid,
                    const std::vector<cplx>& u, const std::vector<cplx>& up,
                    const std::vector<cplx>& upp);

struct CertifyConfig {
    double range_lo = 0.0;  // 0/0 means the default two-range scan
    double range_hi = 0.0;
    int scan_n = 181;
    int workers = 1;
    ShootingConfig shoot{};
    double endpoint_margin = 1e-3;
    bool corrupt_coefficient = false;  // negative-control fixture: flips the
                                       // potential sign in the closed-form
                                       // residual sub-check
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string detail;
};

struct CertificateReport {
    CertifyConfig config;
    std::vector<CheckResult> checks;
    std::vector<RootInfo> roots;  // all scan roots, in lambda order
    bool pass = false;            // iff every sub-check passed
};

/// Assembles the full certificate: miss scans (default: the unit interval,
/// the gauge window around 1, and (1,3]), closed-form residuals, positivity
/// grid, beta root counts for both potential readings, and regularity
/// residuals. Roots are acceptable only at lambda = 1.
CertificateReport full_certificate(const CertifyConfig& config = {});

} // namespace sswm

#endif
