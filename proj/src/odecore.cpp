#include "sswm/odecore.hpp"
#include "sswm/errors.hpp"

#include <cmath>

namespace sswm {

namespace {

void require_interior(double rho, const char* who) {
    if (rho == 0.0 || rho == 1.0)
        throw singular_point_error(std::string(who) +
                                   ": rho = 0 and rho = 1 are singular points");
    if (rho < 0.0 || rho > 1.0)
        throw domain_error(std::string(who) + ": rho outside (0,1)");
}

// (1-rho^2)^z with 1-rho^2 > 0
cplx pow1m(double rho, cplx z) {
    const double base = (1.0 - rho) * (1.0 + rho);
    return std::exp(z * std::log(base));
}

} // namespace

double cos2f0(double rho) {
    const double r2 = rho * rho;
    const double d = 1.0 + r2;
    return (r2 * r2 - 6.0 * r2 + 1.0) / (d * d);
}

double cosf0(double rho) {
    const double r2 = rho * rho;
    return (1.0 - r2) / (1.0 + r2);
}

Background eval_background(double rho) {
    if (rho < 0.0 || rho > 1.0)
        throw domain_error("eval_background: rho outside [0,1]");
    return {2.0 * std::atan(rho), cos2f0(rho)};
}

double theta(double rho) { return 2.0 * rho / (1.0 + rho * rho); }

double theta_prime(double rho) {
    const double d = 1.0 + rho * rho;
    return 2.0 * (1.0 - rho * rho) / (d * d);
}

double chi(double rho) {
    const double lg = std::log((1.0 - rho) / (1.0 + rho));
    return (1.0 / (rho * rho) + 6.0 * rho * lg + 9.0) / (1.0 + rho * rho);
}

double chi_prime(double rho) {
    // chi = g/(1+rho^2), g = rho^-2 + 6 rho log((1-rho)/(1+rho)) + 9
    const double lg = std::log((1.0 - rho) / (1.0 + rho));
    const double g = 1.0 / (rho * rho) + 6.0 * rho * lg + 9.0;
    const double gp =
        -2.0 / (rho * rho * rho) + 6.0 * lg - 12.0 * rho / (1.0 - rho * rho);
    const double d = 1.0 + rho * rho;
    return (gp * d - 2.0 * rho * g) / (d * d);
}

double theta_second(double rho) {
    const double d = 1.0 + rho * rho;
    return (4.0 * rho * rho * rho - 12.0 * rho) / (d * d * d);
}

double chi_second(double rho) {
    const double lg = std::log((1.0 - rho) / (1.0 + rho));
    const double g = 1.0 / (rho * rho) + 6.0 * rho * lg + 9.0;
    const double gp =
        -2.0 / (rho * rho * rho) + 6.0 * lg - 12.0 * rho / (1.0 - rho * rho);
    const double om = 1.0 - rho * rho;
    const double gpp = 6.0 / (rho * rho * rho * rho) - 12.0 / om -
                       12.0 * (1.0 + rho * rho) / (om * om);
    const double d = 1.0 + rho * rho;
    return gpp / d - 4.0 * rho * gp / (d * d) - 2.0 * g / (d * d) +
           8.0 * rho * rho * g / (d * d * d);
}

double wronskian_theta_chi(double rho) {
    return -6.0 / (rho * rho * (1.0 - rho * rho));
}

cplx p_coeff(double rho, cplx lam) {
    return 2.0 / rho - 2.0 * lam * rho / (1.0 - rho * rho);
}

cplx r_coeff(double rho, cplx lam) {
    const double om = 1.0 - rho * rho;
    return 2.0 * cos2f0(rho) / (rho * rho * om) + lam * (1.0 + lam) / om;
}

cplx pencil_second_derivative(double rho, cplx lam, cplx u, cplx up) {
    require_interior(rho, "pencil_second_derivative");
    return -p_coeff(rho, lam) * up + r_coeff(rho, lam) * u;
}

SlPair sl_transform(double rho, cplx lam, cplx u, cplx up) {
    require_interior(rho, "sl_transform");
    const cplx m = rho * pow1m(rho, 0.5 * lam);
    const cplx mp =
        pow1m(rho, 0.5 * lam) * (1.0 - lam * rho * rho / (1.0 - rho * rho));
    return {m * u, mp * u + m * up};
}

SlPair sl_inverse(double rho, cplx lam, cplx ut, cplx utp) {
    require_interior(rho, "sl_inverse");
    const cplx m = rho * pow1m(rho, 0.5 * lam);
    const cplx mp =
        pow1m(rho, 0.5 * lam) * (1.0 - lam * rho * rho / (1.0 - rho * rho));
    const cplx u = ut / m;
    return {u, (utp - mp * u) / m};
}

cplx sl_potential(double rho, cplx lam) {
    require_interior(rho, "sl_potential");
    const double om = 1.0 - rho * rho;
    return 2.0 * cos2f0(rho) / (rho * rho * om) - lam * (2.0 - lam) / (om * om);
}

cplx q_operator(double rho, cplx lam, cplx u, cplx up) {
    require_interior(rho, "q_operator");
    return (2.0 * (lam - 1.0) * rho * up + (lam * (1.0 + lam) - 2.0) * u) /
           (1.0 - rho * rho);
}

cplx psi_prime(double rho, cplx lam) {
    return pow1m(rho, -lam) / (rho * rho);
}

cplx psi_eval(double rho, cplx lam, double c, const QuadOptions& opts) {
    if (rho <= 0.0 || rho >= 1.0 || c <= 0.0 || c >= 1.0)
        throw domain_error("psi_eval: rho and c must lie in (0,1)");
    return integrate_gk([lam](double xi) { return psi_prime(xi, lam); }, c, rho,
                        opts);
}

namespace {

// numerator of beta_lambda in x = rho^2; sign of beta on (0,1) equals its sign
double beta_numerator(double x, double lam, BetaForm form) {
    const double d = 1.0 + x;
    if (form == BetaForm::cos_2f0)
        return lam * (1.0 + lam) * x + 2.0 * (x * x - 6.0 * x + 1.0) / (d * d);
    return lam * (1.0 + lam) * x + 2.0 * (1.0 - x) / d;
}

} // namespace

int beta_sign_changes(double lam, BetaForm form, int ngrid) {
    int changes = 0;
    double prev = beta_numerator(1.0 / (ngrid + 1.0), lam, form);
    for (int k = 2; k <= ngrid; ++k) {
        const double rho = static_cast<double>(k) / (ngrid + 1.0);
        const double cur = beta_numerator(rho * rho, lam, form);
        if (prev * cur < 0.0) ++changes;
        if (cur != 0.0) prev = cur;
    }
    return changes;
}

double beta_root(double lam) {
    if (lam <= 0.0 || lam >= 1.0)
        throw domain_error("beta_root: lambda must lie in (0,1)");
    const int n = beta_sign_changes(lam);
    if (n != 1)
        throw root_count_error("beta_root: expected exactly one sign change of "
                               "beta_lambda on (0,1), found " + std::to_string(n));
    // bracket in x = rho^2, then bisect
    const int ngrid = 4000;
    double a = 0.0, b = 0.0;
    double xp = 1.0 / (ngrid + 1.0);
    double fp = beta_numerator(xp * xp, lam, BetaForm::cos_2f0);
    for (int k = 2; k <= ngrid + 1; ++k) {
        const double rho = static_cast<double>(k) / (ngrid + 1.0);
        const double x = rho * rho;
        const double f = beta_numerator(x, lam, BetaForm::cos_2f0);
        if (fp * f <= 0.0) {
            a = xp * xp;
            b = x;
            break;
        }
        xp = rho;
        fp = f;
    }
    double fa = beta_numerator(a, lam, BetaForm::cos_2f0);
    for (int it = 0; it < 200 && (b - a) > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = beta_numerator(m, lam, BetaForm::cos_2f0);
        if (fa * fm <= 0.0)
            b = m;
        else {
            a = m;
            fa = fm;
        }
    }
    return std::sqrt(0.5 * (a + b));
}

} // namespace sswm
