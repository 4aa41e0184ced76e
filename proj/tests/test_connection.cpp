#include "doctest.h"

#include <cmath>

#include "sswm/connection.hpp"
#include "sswm/errors.hpp"
#include "sswm/odecore.hpp"

using namespace sswm;

TEST_CASE("config validation reports every bad field at once") {
    ShootingConfig cfg;
    cfg.match_point = 1.5;
    cfg.delta0 = -1.0;
    try {
        cfg.validate();
        FAIL("expected domain_error");
    } catch (const domain_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("match_point") != std::string::npos);
        CHECK(msg.find("delta0") != std::string::npos);
    }
    CHECK_NOTHROW(ShootingConfig{}.validate());
}

TEST_CASE("one-sided solutions against the gauge mode") {
    for (double r : {0.2, 0.5, 0.8}) {
        const Solution s0 = phi0_at(1.0, r);
        CHECK(std::abs(s0.u - theta(r)) < 1e-12);
        const Solution s1 = phi1_at(1.0, r);
        CHECK(std::abs(s1.u - theta(r)) < 1e-12);
    }
    CHECK_THROWS_AS(phi1_at(cplx(-0.5, 0.0), 0.5), domain_error);
}

TEST_CASE("shooting profiles are consistent with point evaluation") {
    const cplx lam = 0.5;
    const std::vector<double> grid = {0.0, 0.1, 0.3, 0.5, 0.7, 0.9};
    const auto prof = phi0_profile(lam, grid);
    CHECK(std::abs(prof[0].u) == 0.0);
    CHECK(std::abs(prof[0].up - 2.0) == 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const Solution s = phi0_at(lam, grid[i]);
        CHECK(std::abs(prof[i].u - s.u) < 1e-12);
        CHECK(std::abs(prof[i].up - s.up) < 1e-11);
    }
    const std::vector<double> grid1 = {0.3, 0.6, 0.9, 1.0};
    const auto prof1 = phi1_profile(lam, grid1);
    CHECK(std::abs(prof1.back().u - 1.0) < 1e-12);
    for (std::size_t i = 0; i + 1 < grid1.size(); ++i) {
        const Solution s = phi1_at(lam, grid1[i]);
        CHECK(std::abs(prof1[i].u - s.u) < 1e-11);
    }
}

TEST_CASE("miss function: gauge eigenvalue and a non-eigenvalue") {
    const ConnectionResult g = miss(1.0);
    CHECK(std::abs(g.miss) == 0.0);
    CHECK(g.cls == MissClass::eigenvalue_candidate);

    const ConnectionResult h = miss(0.5);
    CHECK(std::abs(h.miss) > 1e-3);
    CHECK(h.cls == MissClass::no_eigenvalue);
}

TEST_CASE("real scan finds the gauge root and nothing else nearby") {
    const ScanReport r = scan_real(0.9, 1.1, 41);
    CHECK(r.failures == 0);
    REQUIRE(r.roots.size() == 1);
    CHECK(std::abs(r.roots[0].lam - 1.0) < 1e-6);
    CHECK(r.roots[0].residual < 1e-8);
    CHECK(r.points.size() == 41);
}

TEST_CASE("scan results do not depend on the worker count") {
    const ScanReport a = scan_real(0.3, 0.7, 17, {}, 1);
    const ScanReport b = scan_real(0.3, 0.7, 17, {}, 3);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].lam == b.points[i].lam);
        CHECK(a.points[i].miss == b.points[i].miss);
    }
    CHECK(a.roots.size() == b.roots.size());
}

TEST_CASE("complex scan winding numbers") {
    CHECK(scan_complex({0.8, 1.2, -0.2, 0.2}, 20) == 1);
    CHECK(scan_complex({0.3, 0.7, -0.2, 0.2}, 20) == 0);
    CHECK(scan_complex({0.5, 0.5, -0.2, 0.2}, 20) == 0); // degenerate
    CHECK_THROWS_AS(scan_complex({-0.5, 0.5, -0.2, 0.2}, 20), domain_error);
}
