#ifndef SSWM_CONNECTION_HPP
#define SSWM_CONNECTION_HPP

#include <complex>
#include <string>
#include <vector>

#include "sswm/frobenius.hpp"

namespace sswm {

struct ShootingConfig {
    double delta0 = 1e-2;      // series handoff offset at rho = 0
    double delta1 = 1e-2;      // series handoff offset at rho = 1
    double match_point = 0.5;  // rho_m
    double reltol = 1e-11;
    double abstol = 1e-13;
    int series_order = 40;
    double eig_tol = 1e-7;     // |normalized miss| below this flags a candidate

    void validate() const;     // throws domain_error listing every bad field
};

struct Solution {
    cplx u, up;
};

/// Analytic-at-0 solution at rho_m: series launch at delta0, then adaptive
/// integration of the pencil. lambda = 1 uses the closed-form gauge mode.
Solution phi0_at(cplx lam, double rho_m, const ShootingConfig& cfg = {});

/// Analytic-at-1 solution at rho_m: series launch at 1 - delta1, then
/// backward integration. Requires Re lambda > 0.
Solution phi1_at(cplx lam, double rho_m, const ShootingConfig& cfg = {});

/// phi0 sampled on an ascending grid (series inside its radius, integration
/// beyond). Grid points must lie in [0, 1).
std::vector<Solution> phi0_profile(cplx lam, const std::vector<double>& rho,
                                   const ShootingConfig& cfg = {});

/// phi1 sampled on an ascending grid in (0, 1].
std::vector<Solution> phi1_profile(cplx lam, const std::vector<double>& rho,
                                   const ShootingConfig& cfg = {});

enum class MissClass { eigenvalue_candidate, no_eigenvalue, indeterminate };

struct ConnectionResult {
    cplx lam;
    cplx wronskian;       // W(phi0, phi1)(rho_m)
    double normalization; // (|phi0|+|phi0'|)(|phi1|+|phi1'|) at rho_m
    cplx miss;            // wronskian / normalization
    MissClass cls;
};

/// Normalized Wronskian of the two one-sided solutions at the matching point;
/// zero iff a regular eigenfunction exists.
ConnectionResult miss(cplx lam, const ShootingConfig& cfg = {});

struct ScanPoint {
    double lam;
    double miss;
    MissClass cls;
    bool ok;
    std::string error;
};

struct RootInfo {
    double lam;       // refined root
    double err;       // bracket half-width after refinement
    double residual;  // |miss| at the root
};

struct ScanReport {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    std::vector<ScanPoint> points;
    std::vector<RootInfo> roots;
    int failures = 0;
    double seconds = 0.0;
};

/// Miss function on a real lambda grid; sign changes refined by bisection to
/// 1e-10 in lambda. Integer grid points other than 1 are nudged by 1e-9.
/// Per-point failures are recorded and the scan continues.
ScanReport scan_real(double lo, double hi, int n,
                     const ShootingConfig& cfg = {}, int workers = 1);

struct Rectangle {
    double re_lo, re_hi, im_lo, im_hi;
};

/// Winding number of the miss function along the rectangle boundary
/// (counterclockwise), counting enclosed eigenvalues. Segments are bisected
/// when the phase increment exceeds pi/2; throws argument_jump_error if a
/// jump persists at the depth limit.
int scan_complex(const Rectangle& rect, int n_per_side,
                 const ShootingConfig& cfg = {});

} // namespace sswm

#endif
