#include "sswm/connection.hpp"
#include "sswm/errors.hpp"
#include "sswm/odecore.hpp"
#include "sswm/rk.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace sswm {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct PencilRhs {
    cplx lam;
    State2 operator()(double rho, const State2& y) const {
        return {y[1], -p_coeff(rho, lam) * y[1] + r_coeff(rho, lam) * y[0]};
    }
};

OdeOptions ode_options(const ShootingConfig& cfg) {
    OdeOptions o;
    o.reltol = cfg.reltol;
    o.abstol = cfg.abstol;
    return o;
}

bool is_gauge(cplx lam) { return lam == cplx(1.0, 0.0); }

Solution theta_solution(double rho) { return {theta(rho), theta_prime(rho)}; }

double nudge_integer(double lam) {
    const double r = std::round(lam);
    if (r != 1.0 && std::abs(lam - r) < 1e-12) return lam + 1e-9;
    return lam;
}

} // namespace

void ShootingConfig::validate() const {
    std::string bad;
    if (!(delta0 > 0.0 && delta0 < 0.2)) bad += " delta0";
    if (!(delta1 > 0.0 && delta1 < 0.2)) bad += " delta1";
    if (!(match_point > delta0 && match_point < 1.0 - delta1))
        bad += " match_point";
    if (!(reltol > 0.0) || !(abstol > 0.0)) bad += " tolerances";
    if (series_order < 4) bad += " series_order";
    if (!(eig_tol > 0.0)) bad += " eig_tol";
    if (!bad.empty())
        throw domain_error("ShootingConfig: invalid fields:" + bad);
}

Solution phi0_at(cplx lam, double rho_m, const ShootingConfig& cfg) {
    cfg.validate();
    if (!(rho_m > 0.0 && rho_m < 1.0))
        throw domain_error("phi0_at: rho_m must lie in (0,1)");
    if (is_gauge(lam)) return theta_solution(rho_m);
    const SeriesExpansion se = series_phi0(lam, cfg.series_order);
    if (rho_m <= cfg.delta0) {
        auto [u, up] = se.eval(rho_m);
        return {u, up};
    }
    auto [u, up] = se.eval(cfg.delta0);
    const State2 y =
        integrate_ode(PencilRhs{lam}, cfg.delta0, rho_m, {u, up}, ode_options(cfg));
    return {y[0], y[1]};
}

Solution phi1_at(cplx lam, double rho_m, const ShootingConfig& cfg) {
    cfg.validate();
    if (!(rho_m > 0.0 && rho_m < 1.0))
        throw domain_error("phi1_at: rho_m must lie in (0,1)");
    if (lam.real() <= 0.0)
        throw domain_error("phi1_at: requires Re lambda > 0");
    if (is_gauge(lam)) return theta_solution(rho_m);
    const SeriesExpansion se = series_phi1(lam, cfg.series_order);
    const double launch = 1.0 - cfg.delta1;
    if (rho_m >= launch) {
        auto [u, up] = se.eval(rho_m);
        return {u, up};
    }
    auto [u, up] = se.eval(launch);
    const State2 y =
        integrate_ode(PencilRhs{lam}, launch, rho_m, {u, up}, ode_options(cfg));
    return {y[0], y[1]};
}

std::vector<Solution> phi0_profile(cplx lam, const std::vector<double>& rho,
                                   const ShootingConfig& cfg) {
    cfg.validate();
    std::vector<Solution> out(rho.size());
    if (is_gauge(lam)) {
        for (std::size_t i = 0; i < rho.size(); ++i)
            out[i] = theta_solution(rho[i]);
        return out;
    }
    const SeriesExpansion se = series_phi0(lam, cfg.series_order);
    std::vector<double> targets;
    std::size_t first_far = rho.size();
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] <= cfg.delta0) {
            auto [u, up] = se.eval(rho[i]);
            out[i] = {u, up};
        } else {
            if (first_far == rho.size()) first_far = i;
            targets.push_back(rho[i]);
        }
    }
    if (!targets.empty()) {
        auto [u, up] = se.eval(cfg.delta0);
        std::size_t i = first_far;
        integrate_path(
            PencilRhs{lam}, cfg.delta0, targets, {u, up},
            [&](double, const State2& y) { out[i++] = {y[0], y[1]}; },
            ode_options(cfg));
    }
    return out;
}

std::vector<Solution> phi1_profile(cplx lam, const std::vector<double>& rho,
                                   const ShootingConfig& cfg) {
    cfg.validate();
    if (lam.real() <= 0.0)
        throw domain_error("phi1_profile: requires Re lambda > 0");
    std::vector<Solution> out(rho.size());
    if (is_gauge(lam)) {
        for (std::size_t i = 0; i < rho.size(); ++i)
            out[i] = theta_solution(rho[i]);
        return out;
    }
    const SeriesExpansion se = series_phi1(lam, cfg.series_order);
    const double launch = 1.0 - cfg.delta1;
    std::vector<double> targets; // descending below the launch point
    std::size_t last_far = 0;
    bool any_far = false;
    for (std::size_t i = rho.size(); i-- > 0;) {
        if (rho[i] >= launch) {
            auto [u, up] = se.eval(rho[i]);
            out[i] = {u, up};
        } else {
            if (!any_far) {
                last_far = i;
                any_far = true;
            }
            targets.push_back(rho[i]);
        }
    }
    if (any_far) {
        auto [u, up] = se.eval(launch);
        std::size_t i = last_far;
        integrate_path(
            PencilRhs{lam}, launch, targets, {u, up},
            [&](double, const State2& y) { out[i--] = {y[0], y[1]}; },
            ode_options(cfg));
    }
    return out;
}

ConnectionResult miss(cplx lam, const ShootingConfig& cfg) {
    const Solution a = phi0_at(lam, cfg.match_point, cfg);
    const Solution b = phi1_at(lam, cfg.match_point, cfg);
    ConnectionResult r;
    r.lam = lam;
    r.wronskian = a.u * b.up - a.up * b.u;
    r.normalization = (std::abs(a.u) + std::abs(a.up)) *
                      (std::abs(b.u) + std::abs(b.up));
    if (!(r.normalization > 1e-280)) {
        r.miss = 0.0;
        r.cls = MissClass::indeterminate;
        return r;
    }
    r.miss = r.wronskian / r.normalization;
    r.cls = (std::abs(r.miss) < cfg.eig_tol) ? MissClass::eigenvalue_candidate
                                             : MissClass::no_eigenvalue;
    return r;
}

ScanReport scan_real(double lo, double hi, int n, const ShootingConfig& cfg,
                     int workers) {
    if (!(lo > 0.0 && lo < hi) || n < 2)
        throw domain_error("scan_real: need 0 < lo < hi and n >= 2");
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        grid[static_cast<std::size_t>(k)] =
            nudge_integer(lo + (hi - lo) * k / (n - 1));

    ScanReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.n = n;
    rep.points.resize(grid.size());

    auto eval_point = [&](std::size_t k) {
        ScanPoint p;
        p.lam = grid[k];
        try {
            const ConnectionResult r = miss(cplx(grid[k], 0.0), cfg);
            if (std::abs(r.miss.imag()) > 1e-10)
                throw integrator_error("miss not real for real lambda");
            p.miss = r.miss.real();
            p.cls = r.cls;
            p.ok = true;
        } catch (const std::exception& e) {
            p.miss = 0.0;
            p.cls = MissClass::indeterminate;
            p.ok = false;
            p.error = e.what();
        }
        rep.points[k] = p;
    };

    const int nw = std::max(1, workers);
    if (nw == 1) {
        for (std::size_t k = 0; k < grid.size(); ++k) eval_point(k);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (grid.size() + nw - 1) / nw;
        for (int w = 0; w < nw; ++w) {
            const std::size_t b = static_cast<std::size_t>(w) * chunk;
            const std::size_t e = std::min(grid.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, b, e] {
                for (std::size_t k = b; k < e; ++k) eval_point(k);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (const auto& p : rep.points)
        if (!p.ok) ++rep.failures;

    auto miss_real = [&](double lam) {
        return miss(cplx(lam, 0.0), cfg).miss.real();
    };

    // roots sitting on grid points
    for (const auto& p : rep.points)
        if (p.ok && std::abs(p.miss) < cfg.eig_tol)
            rep.roots.push_back({p.lam, 0.0, std::abs(p.miss)});

    // bracketed sign changes, refined by bisection
    for (std::size_t k = 0; k + 1 < rep.points.size(); ++k) {
        const ScanPoint& a = rep.points[k];
        const ScanPoint& b = rep.points[k + 1];
        if (!a.ok || !b.ok) continue;
        if (!(a.miss * b.miss < 0.0)) continue;
        double xa = a.lam, xb = b.lam, fa = a.miss;
        while (xb - xa > 1e-10) {
            const double m = 0.5 * (xa + xb);
            const double fm = miss_real(m);
            if (fa * fm <= 0.0)
                xb = m;
            else {
                xa = m;
                fa = fm;
            }
        }
        const double root = 0.5 * (xa + xb);
        rep.roots.push_back({root, 0.5 * (xb - xa), std::abs(miss_real(root))});
    }
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const RootInfo& x, const RootInfo& y) { return x.lam < y.lam; });

    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

namespace {

double arg_increment(cplx a, cplx b) { return std::arg(b / a); }

double walk_segment(const std::function<cplx(cplx)>& f, cplx za, cplx fa,
                    cplx zb, cplx fb, int depth) {
    const double d = arg_increment(fa, fb);
    if (std::abs(d) <= 0.5 * kPi) return d;
    if (depth >= 24)
        throw argument_jump_error(
            "scan_complex: phase increment above pi/2 at depth limit "
            "(boundary grid too coarse or zero on contour)");
    const cplx zm = 0.5 * (za + zb);
    const cplx fm = f(zm);
    return walk_segment(f, za, fa, zm, fm, depth + 1) +
           walk_segment(f, zm, fm, zb, fb, depth + 1);
}

} // namespace

int scan_complex(const Rectangle& rect, int n_per_side,
                 const ShootingConfig& cfg) {
    if (!(rect.re_lo > 0.0))
        throw domain_error("scan_complex: rectangle must lie in Re lambda > 0");
    if (rect.re_lo > rect.re_hi || rect.im_lo > rect.im_hi)
        throw domain_error("scan_complex: malformed rectangle");
    if (rect.re_lo == rect.re_hi || rect.im_lo == rect.im_hi) return 0;
    if (n_per_side < 2)
        throw domain_error("scan_complex: n_per_side must be >= 2");
    cfg.validate();

    auto f = [&](cplx lam) { return miss(lam, cfg).miss; };

    std::vector<cplx> corners = {
        {rect.re_lo, rect.im_lo},
        {rect.re_hi, rect.im_lo},
        {rect.re_hi, rect.im_hi},
        {rect.re_lo, rect.im_hi},
    };

    double total = 0.0;
    for (int side = 0; side < 4; ++side) {
        const cplx za = corners[static_cast<std::size_t>(side)];
        const cplx zb = corners[static_cast<std::size_t>((side + 1) % 4)];
        cplx prev_z = za;
        cplx prev_f = f(prev_z);
        for (int k = 1; k <= n_per_side; ++k) {
            const cplx z = za + (zb - za) * (static_cast<double>(k) / n_per_side);
            const cplx fz = f(z);
            total += walk_segment(f, prev_z, prev_f, z, fz, 0);
            prev_z = z;
            prev_f = fz;
        }
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

} // namespace sswm
