#include "sswm/quad.hpp"
#include "sswm/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace sswm {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] (Kronrod weights wk,
// embedded 7-point Gauss weights wg at the odd-index nodes).
constexpr std::array<double, 15> gk_x = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
     0.0,
     0.207784955007898467600689403773245,
     0.405845151377397166906606412076961,
     0.586087235467691130294144838258730,
     0.741531185599394439863864773280788,
     0.864864423359769072789712788640926,
     0.949107912342758524526189684047851,
     0.991455371120812639206854697526329};

constexpr std::array<double, 15> gk_wk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr std::array<double, 7> gk_wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct GkResult {
    cplx value;
    double err;
};

GkResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double m = 0.5 * (a + b);
    cplx acc_k = 0.0, acc_g = 0.0;
    for (int i = 0; i < 15; ++i) {
        const cplx fx = f(m + h * gk_x[i]);
        acc_k += gk_wk[i] * fx;
        if (i % 2 == 1) acc_g += gk_wg[i / 2] * fx;
    }
    acc_k *= h;
    acc_g *= h;
    return {acc_k, std::abs(acc_k - acc_g)};
}

void gk_adapt(const std::function<cplx(double)>& f, double a, double b,
              double tol, int depth, const QuadOptions& opts, cplx& total) {
    const GkResult r = gk15(f, a, b);
    if (r.err <= tol || depth >= opts.max_depth) {
        if (r.err > tol)
            throw quadrature_error("adaptive quadrature: tolerance not met");
        total += r.value;
        return;
    }
    const double m = 0.5 * (a + b);
    gk_adapt(f, a, m, 0.5 * tol, depth + 1, opts, total);
    gk_adapt(f, m, b, 0.5 * tol, depth + 1, opts, total);
}

// 4-point Gauss-Legendre on [-1,1]; exact for the cubic interpolants below.
constexpr std::array<double, 4> gl4_x = {
    -0.861136311594052575223946488893,
    -0.339981043584856264802665759103,
     0.339981043584856264802665759103,
     0.861136311594052575223946488893};
constexpr std::array<double, 4> gl4_w = {
    0.347854845137453857373063949222,
    0.652145154862546142626936050778,
    0.652145154862546142626936050778,
    0.347854845137453857373063949222};

// Lagrange cubic through (xs[j0..j0+3], fs[j0..j0+3]) evaluated at t.
cplx lagrange4(const std::vector<double>& xs, const std::vector<cplx>& fs,
               std::size_t j0, double t) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        double w = 1.0;
        for (std::size_t k = 0; k < 4; ++k) {
            if (k == j) continue;
            w *= (t - xs[j0 + k]) / (xs[j0 + j] - xs[j0 + k]);
        }
        acc += w * fs[j0 + j];
    }
    return acc;
}

std::size_t stencil_start(std::size_t i, std::size_t n) {
    // interval [i, i+1]; stencil {i-1,...,i+2} clamped to [0, n-1]
    if (i == 0) return 0;
    if (i + 2 >= n) return n - 4;
    return i - 1;
}

} // namespace

cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  const QuadOptions& opts) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const GkResult probe = gk15(f, a, b);
    const double tol =
        std::max(opts.abstol, opts.reltol * std::abs(probe.value));
    cplx total = 0.0;
    gk_adapt(f, a, b, tol, 0, opts, total);
    return sign * total;
}

std::vector<cplx> cumulative_integral(const std::vector<double>& x,
                                      const std::vector<cplx>& f) {
    const std::size_t n = x.size();
    if (n < 4 || f.size() != n)
        throw domain_error("cumulative_integral: need >= 4 matching samples");
    std::vector<cplx> out(n);
    out[0] = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t j0 = stencil_start(i, n);
        const double h = 0.5 * (x[i + 1] - x[i]);
        const double m = 0.5 * (x[i + 1] + x[i]);
        cplx acc = 0.0;
        for (int g = 0; g < 4; ++g)
            acc += gl4_w[g] * lagrange4(x, f, j0, m + h * gl4_x[g]);
        out[i + 1] = out[i] + h * acc;
    }
    return out;
}

std::vector<cplx> tail_integral_weighted(const std::vector<double>& x,
                                         const std::vector<cplx>& h, cplx mu) {
    const std::size_t n = x.size();
    if (n < 4 || h.size() != n)
        throw domain_error("tail_integral_weighted: need >= 4 matching samples");
    if (x.back() != 1.0)
        throw domain_error("tail_integral_weighted: grid must end at 1");
    const double p = 1.0 + mu.real();
    if (p <= 0.0)
        throw domain_error("tail_integral_weighted: Re(mu) must exceed -1");
    const double im = mu.imag();

    std::vector<cplx> out(n);
    out[n - 1] = 0.0;
    // Walk intervals toward the endpoint in t = 1-s; on each interval integrate
    // t^mu * h via the substitution tau = t^p, which removes the real part of
    // the weight exactly. h is interpolated from its grid samples.
    for (std::size_t i = n - 1; i-- > 0;) {
        const double ta = 1.0 - x[i + 1]; // closer to the endpoint
        const double tb = 1.0 - x[i];
        const double tau_a = std::pow(ta, p);
        const double tau_b = std::pow(tb, p);
        const std::size_t j0 = stencil_start(i, n);
        const double hw = 0.5 * (tau_b - tau_a);
        const double mid = 0.5 * (tau_b + tau_a);
        cplx acc = 0.0;
        for (int g = 0; g < 4; ++g) {
            const double tau = mid + hw * gl4_x[g];
            const double t = std::pow(tau, 1.0 / p);
            cplx val = lagrange4(x, h, j0, 1.0 - t);
            if (im != 0.0) {
                const double phase = im * std::log(t);
                val *= cplx(std::cos(phase), std::sin(phase));
            }
            acc += gl4_w[g] * val;
        }
        out[i] = out[i + 1] + hw * acc / p;
    }
    return out;
}

std::vector<double> clustered_grid(double a, double b, int n, double cluster_at) {
    if (n < 2) throw domain_error("clustered_grid: need n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int j = 0; j < n; ++j) {
        const double s = std::sin(0.5 * pi * j / (n - 1));
        g[static_cast<std::size_t>(j)] = s * s; // quadratic clustering at 0
    }
    if (cluster_at == a) {
        for (auto& v : g) v = a + (b - a) * v;
    } else if (cluster_at == b) {
        std::vector<double> r(g.size());
        for (std::size_t j = 0; j < g.size(); ++j)
            r[g.size() - 1 - j] = b - (b - a) * g[j];
        g = std::move(r);
    } else {
        throw domain_error("clustered_grid: cluster_at must be an endpoint");
    }
    g.front() = a;
    g.back() = b;
    return g;
}

} // namespace sswm
