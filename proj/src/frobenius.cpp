#include "sswm/frobenius.hpp"
#include "sswm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sswm {

namespace {

using Poly = std::vector<cplx>; // coefficient list, ascending powers

Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly add(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

Poly scale(Poly a, cplx c) {
    for (auto& v : a) v *= c;
    return a;
}

Poly shift_up(const Poly& a, int k) {
    Poly r(a.size() + static_cast<std::size_t>(k), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

Poly shift_down(const Poly& a, int k) {
    // divide by x^k; the dropped coefficients must vanish
    Poly r(a.begin() + k, a.end());
    return r;
}

// p(1 - t) as a polynomial in t
Poly subst_one_minus(const Poly& p) {
    Poly r(p.size(), 0.0);
    for (std::size_t m = 0; m < p.size(); ++m) {
        // (1-t)^m = sum_k C(m,k) (-t)^k
        double binom = 1.0;
        for (std::size_t k = 0; k <= m; ++k) {
            r[k] += p[m] * binom * ((k % 2) ? -1.0 : 1.0);
            binom = binom * static_cast<double>(m - k) / static_cast<double>(k + 1);
        }
    }
    return r;
}

// Pencil ODE cleared of denominators: A u'' + B u' + C u = 0 with
// A = rho^2 (1-rho^2)(1+rho^2)^2,
// B = 2 rho (1+rho^2)^2 (1 - (1+lambda) rho^2),
// C = -[ 2(rho^4 - 6 rho^2 + 1) + lambda(1+lambda) rho^2 (1+rho^2)^2 ].
struct ClearedPencil {
    Poly A, B, C;
};

ClearedPencil cleared_pencil(cplx lam) {
    const Poly onep2sq = {1.0, 0.0, 2.0, 0.0, 1.0}; // (1+rho^2)^2
    ClearedPencil out;
    out.A = shift_up(mul(Poly{1.0, 0.0, -1.0}, onep2sq), 2);
    out.B = shift_up(scale(mul(Poly{1.0, 0.0, -(1.0 + lam)}, onep2sq), 2.0), 1);
    out.C = add(scale(Poly{1.0, 0.0, -6.0, 0.0, 1.0}, -2.0),
                scale(shift_up(onep2sq, 2), -lam * (1.0 + lam)));
    return out;
}

// Frobenius coefficients for x^2 P u'' + x Q u' + R u = 0 at exponent s.
std::vector<cplx> recurrence(const Poly& P, const Poly& Q, const Poly& R,
                             double s, cplx a0, int order) {
    auto at = [](const Poly& p, std::size_t k) -> cplx {
        return k < p.size() ? p[k] : cplx(0.0);
    };
    std::vector<cplx> a(static_cast<std::size_t>(order) + 1, 0.0);
    a[0] = a0;
    for (int n = 1; n <= order; ++n) {
        cplx rhs = 0.0;
        for (int j = 0; j < n; ++j) {
            const double sj = s + j;
            rhs += a[static_cast<std::size_t>(j)] *
                   (at(P, static_cast<std::size_t>(n - j)) * sj * (sj - 1.0) +
                    at(Q, static_cast<std::size_t>(n - j)) * sj +
                    at(R, static_cast<std::size_t>(n - j)));
        }
        const double sn = s + n;
        const cplx indicial = at(P, 0) * sn * (sn - 1.0) + at(Q, 0) * sn + at(R, 0);
        if (std::abs(indicial) < 1e-12)
            throw log_branch_error(
                "frobenius: degenerate recurrence (integer exponent gap hits "
                "the constructed branch)");
        a[static_cast<std::size_t>(n)] = -rhs / indicial;
    }
    return a;
}

double truncation_estimate(const std::vector<cplx>& a, double radius) {
    double maxterm = 0.0, rk = 1.0;
    for (const auto& c : a) {
        maxterm = std::max(maxterm, std::abs(c) * rk);
        rk *= radius;
    }
    rk /= radius;
    return maxterm > 0.0 ? std::abs(a.back()) * rk / maxterm : 0.0;
}

} // namespace

IndicialData indices_at(int center, cplx lam) {
    if (center == 0) {
        return {0, 1.0, -2.0, 3.0, true, false};
    }
    if (center == 1) {
        const cplx s2 = 1.0 - lam;
        const bool int_gap = std::abs(lam.imag()) < 1e-14 &&
                             std::abs(lam.real() - std::round(lam.real())) < 1e-14;
        const bool bounded_both = std::abs(lam.imag()) < 1e-14 &&
                                  lam.real() > 0.0 && lam.real() < 1.0;
        return {1, 0.0, s2, lam - 1.0, int_gap, !bounded_both};
    }
    throw domain_error("indices_at: center must be 0 or 1");
}

std::pair<cplx, cplx> SeriesExpansion::eval(double rho) const {
    const double x = (center == 0) ? rho : 1.0 - rho;
    if (std::abs(x) > radius)
        throw out_of_radius_error("SeriesExpansion::eval: outside validity radius");
    cplx s0 = 0.0, s1 = 0.0; // sum a_k x^k and its x-derivative
    for (std::size_t k = coeff.size(); k-- > 0;) {
        s1 = s1 * x + s0;
        s0 = s0 * x + coeff[k];
    }
    cplx u, dudx;
    if (exponent == 0) {
        u = s0;
        dudx = s1;
    } else { // exponent == 1
        u = x * s0;
        dudx = s0 + x * s1;
    }
    const double sign = (center == 0) ? 1.0 : -1.0;
    return {u, sign * dudx};
}

SeriesExpansion series_phi0(cplx lam, int order) {
    if (order < 4) throw domain_error("series_phi0: order must be >= 4");
    const ClearedPencil cp = cleared_pencil(lam);
    // divide out the regular-singular prefactors: rho^2 P u'' + rho Q u' + R u
    const Poly P = shift_down(cp.A, 2);
    const Poly Q = shift_down(cp.B, 1);
    const Poly& R = cp.C;
    SeriesExpansion se;
    se.center = 0;
    se.exponent = 1;
    se.coeff = recurrence(P, Q, R, 1.0, 2.0, order); // phi0'(0) = 2
    se.truncation = truncation_estimate(se.coeff, se.radius);
    return se;
}

SeriesExpansion series_phi1(cplx lam, int order) {
    if (order < 4) throw domain_error("series_phi1: order must be >= 4");
    const ClearedPencil cp = cleared_pencil(lam);
    // in t = 1 - rho: t^2 [A(1-t)/t] u_tt + t [-B(1-t)] u_t + [t C(1-t)] u = 0
    const Poly P = shift_down(subst_one_minus(cp.A), 1);
    const Poly Q = scale(subst_one_minus(cp.B), -1.0);
    const Poly R = shift_up(subst_one_minus(cp.C), 1);
    SeriesExpansion se;
    se.center = 1;
    se.exponent = 0;
    se.coeff = recurrence(P, Q, R, 0.0, 1.0, order); // phi1(1) = 1
    se.truncation = truncation_estimate(se.coeff, se.radius);
    return se;
}

} // namespace sswm
