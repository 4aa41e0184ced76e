#include "doctest.h"

#include <cmath>
#include <complex>

#include "sswm/errors.hpp"
#include "sswm/quad.hpp"

using namespace sswm;
using namespace std::complex_literals;

TEST_CASE("adaptive quadrature against closed antiderivatives") {
    const cplx s = integrate_gk([](double x) { return cplx(std::sin(x)); },
                                0.0, M_PI);
    CHECK(std::abs(s - 2.0) < 1e-13);

    // complex integrand: int_0^1 exp(i pi x) = 2i/pi
    const cplx e = integrate_gk(
        [](double x) { return std::exp(1i * M_PI * x); }, 0.0, 1.0);
    CHECK(std::abs(e - 2.0i / M_PI) < 1e-13);

    // reversed limits flip the sign
    const cplx r = integrate_gk([](double x) { return cplx(std::sin(x)); },
                                M_PI, 0.0);
    CHECK(std::abs(r + 2.0) < 1e-13);
}

TEST_CASE("adaptive quadrature reports unreachable tolerance") {
    CHECK_THROWS_AS(
        integrate_gk([](double x) { return cplx(1.0 / x); }, 0.0, 1.0),
        quadrature_error);
}

TEST_CASE("cumulative integral is exact for cubics and accurate for sin") {
    const std::vector<double> xs = clustered_grid(0.0, 1.0, 201, 0.0);
    std::vector<cplx> cubic(xs.size()), f(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cubic[i] = xs[i] * xs[i] * xs[i] - 2.0 * xs[i] + 1.0;
        f[i] = std::sin(xs[i]);
    }
    const auto c = cumulative_integral(xs, cubic);
    const auto s = cumulative_integral(xs, f);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double exact_cubic = x * x * x * x / 4.0 - x * x + x;
        CHECK(std::abs(c[i] - exact_cubic) < 1e-14);
        CHECK(std::abs(s[i] - (1.0 - std::cos(x))) < 1e-10);
    }
}

TEST_CASE("weighted tail integral against the beta-function oracle") {
    const std::vector<double> xs = clustered_grid(0.3, 1.0, 501, 1.0);
    std::vector<cplx> one(xs.size(), 1.0), lin(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) lin[i] = xs[i];

    for (cplx mu : {cplx(-0.7), cplx(0.3, 0.4), cplx(0.0)}) {
        // an oscillatory weight phase (Im mu != 0) is only resolved to ~1e-9
        // near the endpoint; the real-weight cases are near machine accuracy
        const double tol = mu.imag() == 0.0 ? 1e-12 : 5e-9;
        const auto t1 = tail_integral_weighted(xs, one, mu);
        const auto t2 = tail_integral_weighted(xs, lin, mu);
        for (std::size_t i = 0; i < xs.size(); i += 50) {
            const double T = 1.0 - xs[i];
            const cplx e1 = std::pow(cplx(T), mu + 1.0) / (mu + 1.0);
            const cplx e2 = e1 - std::pow(cplx(T), mu + 2.0) / (mu + 2.0);
            CHECK(std::abs(t1[i] - e1) < tol);
            CHECK(std::abs(t2[i] - e2) < tol);
        }
        CHECK(std::abs(t1.back()) == 0.0);
    }
}

TEST_CASE("weighted tail integral validates its inputs") {
    std::vector<double> xs = clustered_grid(0.3, 0.9, 50, 0.9);
    std::vector<cplx> h(xs.size(), 1.0);
    CHECK_THROWS_AS(tail_integral_weighted(xs, h, 0.0), domain_error);
    xs = clustered_grid(0.3, 1.0, 50, 1.0);
    h.assign(xs.size(), 1.0);
    CHECK_THROWS_AS(tail_integral_weighted(xs, h, cplx(-1.2)), domain_error);
}

TEST_CASE("clustered grid shape") {
    const auto g = clustered_grid(0.2, 0.8, 101, 0.8);
    CHECK(g.size() == 101);
    CHECK(g.front() == 0.2);
    CHECK(g.back() == 0.8);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    // clustering: spacing at the clustered end far below the middle spacing
    CHECK(g[100] - g[99] < 0.1 * (g[51] - g[50]));
    CHECK_THROWS_AS(clustered_grid(0.0, 1.0, 11, 0.5), domain_error);
}
