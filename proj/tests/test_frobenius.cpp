#include "doctest.h"

#include <cmath>

#include "sswm/errors.hpp"
#include "sswm/frobenius.hpp"
#include "sswm/odecore.hpp"

using namespace sswm;

TEST_CASE("indicial exponents at the two singular points") {
    const IndicialData i0 = indices_at(0, 0.37);
    CHECK(i0.s1 == cplx(1.0));
    CHECK(i0.s2 == cplx(-2.0));
    CHECK(i0.integer_gap);

    const IndicialData i1 = indices_at(1, 0.37);
    CHECK(i1.s1 == cplx(0.0));
    CHECK(std::abs(i1.s2 - cplx(0.63)) < 1e-15);
    CHECK_FALSE(i1.analytic_by_value_only);

    CHECK(indices_at(1, 1.5).analytic_by_value_only);
    CHECK_THROWS_AS(indices_at(2, 0.5), domain_error);
}

TEST_CASE("series at 0 for lambda = 1 reproduces the Taylor series of theta") {
    const SeriesExpansion s = series_phi0(1.0, 24);
    // theta = 2 rho (1 - rho^2 + rho^4 - ...): coeff of rho^(1+k)
    for (int k = 0; k <= 20; ++k) {
        double expect = 0.0;
        if (k % 2 == 0) expect = (k % 4 == 0) ? 2.0 : -2.0;
        CHECK(std::abs(s.coeff[static_cast<std::size_t>(k)] - expect) < 1e-13);
    }
    const auto [u, up] = series_phi0(1.0).eval(0.3);
    CHECK(std::abs(u - theta(0.3)) < 1e-13);
    CHECK(std::abs(up - theta_prime(0.3)) < 1e-12);
}

TEST_CASE("series at 0 solves the pencil away from the center") {
    const cplx lam(0.6, 0.2);
    const SeriesExpansion s = series_phi0(lam);
    const double r = 0.25, h = 1e-5;
    const auto [u, up] = s.eval(r);
    const auto [uph, dummy1] = s.eval(r + h);
    (void)dummy1;
    const auto [umh, dummy2] = s.eval(r - h);
    (void)dummy2;
    const cplx upp_num = (uph - 2.0 * u + umh) / (h * h);
    CHECK(std::abs(upp_num - pencil_second_derivative(r, lam, u, up)) < 1e-5);
    CHECK_THROWS_AS(s.eval(0.75), out_of_radius_error);
}

TEST_CASE("series at 1 realizes the regularity condition") {
    for (double lam = 0.1; lam < 0.95; lam += 0.1) {
        const SeriesExpansion s = series_phi1(lam);
        const auto [u1, up1] = s.eval(1.0);
        CHECK(std::abs(u1 - 1.0) == 0.0);
        CHECK(std::abs(up1 - (2.0 - lam - lam * lam) / (2.0 * lam)) < 1e-12);
    }
}

TEST_CASE("series at 1 for lambda = 1 agrees with theta") {
    const SeriesExpansion s = series_phi1(1.0);
    for (double r : {0.7, 0.85, 0.99}) {
        const auto [u, up] = s.eval(r);
        // normalization: theta(1) = 1, so the two coincide directly
        CHECK(std::abs(u - theta(r)) < 1e-12);
        CHECK(std::abs(up - theta_prime(r)) < 1e-11);
    }
}

TEST_CASE("degenerate recurrence at nonpositive integer lambda") {
    CHECK_THROWS_AS(series_phi1(0.0), log_branch_error);
    CHECK_THROWS_AS(series_phi1(-1.0), log_branch_error);
    CHECK_NOTHROW(series_phi1(2.0));
    CHECK_NOTHROW(series_phi1(cplx(0.5, 0.5)));
}
