#include "doctest.h"

#include <cmath>

#include "sswm/errors.hpp"
#include "sswm/odecore.hpp"

using namespace sswm;

TEST_CASE("rational background forms match the trigonometric definitions") {
    for (double r = 0.01; r < 1.0; r += 0.07) {
        const Background b = eval_background(r);
        CHECK(b.f0 == doctest::Approx(2.0 * std::atan(r)).epsilon(1e-15));
        CHECK(std::abs(cos2f0(r) - std::cos(2.0 * b.f0)) < 1e-14);
        CHECK(std::abs(cosf0(r) - std::cos(b.f0)) < 1e-14);
    }
    CHECK_THROWS_AS(eval_background(-0.1), domain_error);
    CHECK_THROWS_AS(eval_background(1.1), domain_error);
}

TEST_CASE("closed-form derivatives of theta and chi") {
    const double h = 1e-6;
    for (double r = 0.05; r < 0.99; r += 0.09) {
        CHECK(theta_prime(r) ==
              doctest::Approx((theta(r + h) - theta(r - h)) / (2 * h))
                  .epsilon(1e-8));
        CHECK(chi_prime(r) ==
              doctest::Approx((chi(r + h) - chi(r - h)) / (2 * h))
                  .epsilon(1e-6));
        CHECK(theta_second(r) ==
              doctest::Approx((theta_prime(r + h) - theta_prime(r - h)) /
                              (2 * h))
                  .epsilon(1e-7));
        CHECK(chi_second(r) ==
              doctest::Approx((chi_prime(r + h) - chi_prime(r - h)) / (2 * h))
                  .epsilon(1e-5));
    }
}

TEST_CASE("theta and chi solve the lambda = 1 pencil; Wronskian identity") {
    for (double r = 0.05; r < 0.99; r += 0.07) {
        const cplx t2 = pencil_second_derivative(r, 1.0, theta(r),
                                                 theta_prime(r));
        CHECK(std::abs(t2 - theta_second(r)) < 1e-10 * std::abs(t2 + 1.0));
        const cplx c2 =
            pencil_second_derivative(r, 1.0, chi(r), chi_prime(r));
        CHECK(std::abs(c2 - chi_second(r)) <
              1e-12 * std::max(1.0, std::abs(c2)));
        const double w =
            theta(r) * chi_prime(r) - theta_prime(r) * chi(r);
        CHECK(std::abs(w - wronskian_theta_chi(r)) <
              1e-12 * std::abs(wronskian_theta_chi(r)));
    }
    CHECK_THROWS_AS(pencil_second_derivative(0.0, 1.0, 0.0, 2.0),
                    singular_point_error);
    CHECK_THROWS_AS(pencil_second_derivative(1.0, 1.0, 1.0, 0.0),
                    singular_point_error);
}

TEST_CASE("perturbation operator point values") {
    // Q_0 (u=1): (0 - 2)/(1 - 1/4) = -8/3
    CHECK(std::abs(q_operator(0.5, 0.0, 1.0, 0.0) + 8.0 / 3.0) < 1e-14);
    // lambda = 1 annihilates everything
    for (double r = 0.1; r < 1.0; r += 0.2)
        CHECK(std::abs(q_operator(r, 1.0, theta(r), theta_prime(r))) == 0.0);
}

TEST_CASE("Sturm-Liouville substitution round-trips and removes the drift") {
    const double r = 0.5, h = 1e-6;
    const cplx lam = 1.0;
    const SlPair t = sl_transform(r, lam, theta(r), theta_prime(r));
    CHECK(std::abs(t.u - 0.5 * std::sqrt(0.75) * theta(0.5)) < 1e-14);
    const SlPair back = sl_inverse(r, lam, t.u, t.up);
    CHECK(std::abs(back.u - theta(r)) < 1e-14);
    CHECK(std::abs(back.up - theta_prime(r)) < 1e-13);

    // transformed gauge mode satisfies v'' = V v (numeric second derivative)
    auto v = [&](double x) {
        return sl_transform(x, lam, theta(x), theta_prime(x)).u;
    };
    const cplx vpp = (v(r + h) - 2.0 * v(r) + v(r - h)) / (h * h);
    CHECK(std::abs(vpp - sl_potential(r, lam) * v(r)) < 1e-3);
}

TEST_CASE("antiderivative oracle for psi") {
    // lambda = 1: psi' = 1/(rho^2(1-rho^2)), antiderivative -1/rho + atanh rho
    const double expect = (-1.0 / 0.8 + std::atanh(0.8)) -
                          (-1.0 / 0.5 + std::atanh(0.5));
    CHECK(std::abs(psi_eval(0.8, 1.0) - expect) < 1e-11);
    CHECK(std::abs(psi_eval(0.5, 0.7)) == 0.0); // base point c = rho
}

TEST_CASE("potential root structure on (0,1)") {
    for (double lam : {0.25, 0.5, 0.75}) {
        CHECK(beta_sign_changes(lam) == 1);
        const double rs = beta_root(lam);
        CHECK(rs > 0.0);
        CHECK(rs < 1.0);
        CHECK(std::abs(r_coeff(rs, lam)) < 1e-8);
        // bracketing sanity
        CHECK(r_coeff(rs - 1e-4, lam).real() *
                  r_coeff(rs + 1e-4, lam).real() <
              0.0);
    }
    // lambda = 1/2 oracle: x = rho^2 solves 0.75 x^3 + 3.5 x^2 - 11.25 x + 2
    const double x = beta_root(0.5) * beta_root(0.5);
    CHECK(std::abs(0.75 * x * x * x + 3.5 * x * x - 11.25 * x + 2.0) < 1e-10);
    CHECK(beta_root(0.5) == doctest::Approx(0.43518).epsilon(1e-4));
}
