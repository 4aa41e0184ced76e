#ifndef SSWM_FROBENIUS_HPP
#define SSWM_FROBENIUS_HPP

#include <complex>
#include <utility>
#include <vector>

namespace sswm {

using cplx = std::complex<double>;

// Indicial data at a regular singular point of the pencil.
// At rho = 0 the exponents are {1, -2} for every lambda; at rho = 1 they are
// {0, 1 - lambda}. For lambda in (0,1) both branches at rho = 1 are bounded
// (the second one as (1-rho)^(1-lambda)); value boundedness alone does not
// single out the analytic branch, only the C^1 one. `analytic_by_value_only`
// is false in exactly that situation.
struct IndicialData {
    int center;              // 0 or 1
    cplx s1, s2;             // s1 is the exponent of the constructed branch
    cplx gap;                // s1 - s2
    bool integer_gap;        // log case possible
    bool analytic_by_value_only;
};

IndicialData indices_at(int center, cplx lam);

/// Truncated Frobenius expansion u = sum a_k (x - center)^(s+k) around a
/// regular singular point, together with its truncation diagnostics.
struct SeriesExpansion {
    int center = 0;          // 0 or 1
    int exponent = 0;        // leading exponent (1 at center 0, 0 at center 1)
    std::vector<cplx> coeff; // a_0 .. a_N
    double radius = 0.4;     // validity radius used for evaluation
    double truncation = 0.0; // |a_N| r^N relative to the largest term

    /// Value and d/d rho at rho; throws out_of_radius_error outside the radius.
    std::pair<cplx, cplx> eval(double rho) const;
};

/// Analytic-at-0 branch phi0, normalized to phi0'(0) = 2. N >= 4.
SeriesExpansion series_phi0(cplx lam, int order = 40);

/// Analytic-at-1 branch phi1 (indicial exponent 0), normalized to phi1(1) = 1.
/// Valid for all lambda with the recurrence nondegenerate; throws
/// log_branch_error when lambda is a nonpositive integer (the exponent-0
/// branch degenerates there). The first coefficient realizes the regularity
/// condition phi1'(1) = (2 - lambda - lambda^2)/(2 lambda) phi1(1).
SeriesExpansion series_phi1(cplx lam, int order = 40);

} // namespace sswm

#endif
