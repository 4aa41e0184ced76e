#ifndef SSWM_ODECORE_HPP
#define SSWM_ODECORE_HPP

#include <complex>
#include <utility>

#include "sswm/quad.hpp"

namespace sswm {

// Closed-form quantities for the blow-up profile f0(rho) = 2*arctan(rho) and
// the spectral pencil linearized around it, on the backward light cone
// rho in [0,1]. Everything here is a pure function; the spectral parameter
// lambda is the only free input.

struct Background {
    double f0;      // 2*arctan(rho)
    double cos2f0;  // rational form (rho^4 - 6 rho^2 + 1) / (1 + rho^2)^2
};

/// Background profile at rho in [0,1]. Throws domain_error outside.
Background eval_background(double rho);

/// cos(2 f0) in rational form; valid for any rho (used on [0,1]).
double cos2f0(double rho);

/// cos(f0) = (1 - rho^2)/(1 + rho^2). Kept for the beta-root transparency check.
double cosf0(double rho);

// Gauge mode theta(rho) = 2 rho / (1 + rho^2) and the second solution chi of
// the lambda = 1 pencil, with explicitly differentiated closed forms.
double theta(double rho);
double theta_prime(double rho);
double chi(double rho);        // (1/rho^2 + 6 rho log((1-rho)/(1+rho)) + 9)/(1+rho^2)
double chi_prime(double rho);
double theta_second(double rho);
double chi_second(double rho);
double wronskian_theta_chi(double rho); // -6/(rho^2 (1-rho^2))

/// First-order pencil coefficient p(rho,lambda) = 2/rho - 2 lambda rho/(1-rho^2).
cplx p_coeff(double rho, cplx lam);

/// Zeroth-order pencil coefficient
/// r(rho,lambda) = 2 cos(2 f0)/(rho^2 (1-rho^2)) + lambda(1+lambda)/(1-rho^2).
/// Coincides with beta_lambda and with the kernel coefficient q of the
/// rho = 1 integral equation.
cplx r_coeff(double rho, cplx lam);

inline cplx beta_coeff(double rho, cplx lam) { return r_coeff(rho, lam); }
inline cplx q_coeff(double rho, cplx lam) { return r_coeff(rho, lam); }

/// u'' from the pencil ODE: u'' = -p u' + r u. Throws singular_point_error
/// at rho in {0,1} and domain_error outside (0,1).
cplx pencil_second_derivative(double rho, cplx lam, cplx u, cplx up);

struct SlPair {
    cplx u, up;
};

/// Sturm-Liouville substitution u -> rho (1-rho^2)^(lambda/2) u, with derivative.
SlPair sl_transform(double rho, cplx lam, cplx u, cplx up);
SlPair sl_inverse(double rho, cplx lam, cplx ut, cplx utp);

/// Potential V with the Sturm-Liouville form reading u'' - V u = 0:
/// V = 2 cos(2 f0)/(rho^2 (1-rho^2)) - lambda(2-lambda)/(1-rho^2)^2.
cplx sl_potential(double rho, cplx lam);

/// Q_lambda u = [2(lambda-1) rho u' + (lambda(1+lambda)-2) u] / (1-rho^2);
/// the perturbation operator of the rho = 0 integral equation. Vanishes
/// identically iff lambda = 1.
cplx q_operator(double rho, cplx lam, cplx u, cplx up);

/// psi'(rho,lambda) = 1/(rho^2 (1-rho^2)^lambda): derivative of the second
/// kernel solution of the rho = 1 homogeneous equation.
cplx psi_prime(double rho, cplx lam);

/// psi(rho,lambda;c) = integral from c to rho of psi', by adaptive quadrature.
/// rho, c in (0,1). Throws quadrature_error if the tolerance is not met.
cplx psi_eval(double rho, cplx lam, double c = 0.5, const QuadOptions& = {});

enum class BetaForm { cos_2f0, cos_f0 };

/// Number of sign changes of beta_lambda on (0,1), on a fine grid.
int beta_sign_changes(double lam, BetaForm form = BetaForm::cos_2f0,
                      int ngrid = 4000);

/// The unique zero of beta_lambda on (0,1) for lambda in (0,1), to 1e-12.
/// Throws root_count_error if the sign-change count differs from one.
double beta_root(double lam);

} // namespace sswm

#endif
