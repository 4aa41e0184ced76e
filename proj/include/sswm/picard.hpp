#ifndef SSWM_PICARD_HPP
#define SSWM_PICARD_HPP

#include <complex>
#include <vector>

namespace sswm {

using cplx = std::complex<double>;

// Contraction diagnostics for the fixed-point maps of the two integral
// equations (one based at rho = 0 with kernels theta, chi; one based at
// rho = 1 with kernels 1, psi).
struct ContractionEstimate {
    double endpoint = 0.0;   // rho0 (interval [0,rho0]) or rho1 ([rho1,1])
    double sup_bound = 0.0;  // sup of the bound function on the interval
    double lipschitz = 0.0;  // estimated contraction constant of the map
    bool contractive = false;
};

/// Largest tested rho0 for which the rho = 0 map contracts (constant < 0.9).
/// Throws contraction_error if no candidate works.
ContractionEstimate contraction_radius_zero(cplx lam);

/// Smallest tested rho1 for which the rho = 1 map contracts. Requires
/// 0 < Re lambda < 1 (the bound function needs psi bounded at 1).
ContractionEstimate contraction_radius_one(cplx lam);

struct PicardRun {
    cplx lam;
    double a = 0.0, b = 0.0;      // interval
    std::vector<double> grid;
    std::vector<cplx> u, up;      // fixed-point iterate and derivative
    int iterations = 0;
    std::vector<double> diffs;    // successive sup-norm differences
    double residual = 0.0;        // sup |Ku - u| at the final iterate
    bool converged = false;
};

/// Picard iteration for the analytic-at-0 solution on [0, rho0], starting
/// from the inhomogeneous term theta. Throws divergence_error if the
/// differences grow for three consecutive iterations.
PicardRun picard_phi0(cplx lam, double rho0, double tol = 1e-10,
                      int grid_n = 2001, int max_iter = 400);

/// Picard iteration for the analytic-at-1 solution on [rho1, 1], starting
/// from the constant 1. Requires Re lambda > 0; the endpoint weight
/// (1-xi)^(lambda-1) is handled analytically.
PicardRun picard_phi1(cplx lam, double rho1, double tol = 1e-10,
                      int grid_n = 2001, int max_iter = 400);

/// Residual of the rho = 0 integral equation for an externally computed
/// solution sampled on a grid in [0, a], a < 1 (extension check).
double integral_equation_residual_zero(cplx lam,
                                       const std::vector<double>& grid,
                                       const std::vector<cplx>& u,
                                       const std::vector<cplx>& up);

} // namespace sswm

#endif
