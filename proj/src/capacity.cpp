#include "ccap/capacity.hpp"

#include <cmath>

namespace ccap {

namespace {

double logq_inv(const Rational& x, int q) {
    return -std::log(x.get_d()) / std::log(static_cast<double>(q));
}

// nudges a double outward by a few ulps to absorb rounding in log/get_d
double widen_up(double v) {
    for (int i = 0; i < 4; ++i) v = std::nextafter(v, HUGE_VAL);
    return v;
}
double widen_down(double v) {
    for (int i = 0; i < 4; ++i) v = std::nextafter(v, -HUGE_VAL);
    return v;
}

// largest rational below a positive double, cheap and safe for tolerances
Rational rational_below(double v) {
    Rational r(v * 0.999);
    return r;
}

CapacityResult capacity_from_poly(const IntPoly& s, int q, double eps,
                                  CapacityEstimate::Method method) {
    if (q < 2) throw InputError("capacity: requires q >= 2");
    if (!(eps > 0.0 && eps < 1.0)) throw InputError("capacity: eps must lie in (0,1)");

    // root tolerance eps / (2 q ln q)
    Rational tol = rational_below(eps / (2.0 * q * std::log(static_cast<double>(q))));
    if (tol <= 0) throw InputError("capacity: eps too small to represent");

    while (true) {
        RootIsolation iso = smallest_positive_root(s, tol);
        if (iso.status != RootStatus::found)
            throw InternalError("capacity: S has no positive real root");
        Rational lo = iso.interval.lo, hi = iso.interval.hi;
        // the smallest positive root of a counting denominator lies in
        // [1/q, 1]; intersecting keeps the certificate and pins value to [0,1]
        Rational qinv = make_ratio(BigInt(1), BigInt(q));
        if (lo > 1 || hi < qinv)
            throw InternalError("capacity: root interval escapes [1/q, 1]");
        if (hi > 1) hi = 1;
        if (lo < qinv) lo = qinv;

        CapacityEstimate est;
        est.x0 = {lo, hi};
        est.method = method;
        Rational mid = est.x0.midpoint();
        est.value = logq_inv(mid, q);
        double cap_hi = widen_up(logq_inv(lo, q));
        double cap_lo = widen_down(logq_inv(hi, q));
        est.eps = std::max(est.value - cap_lo, cap_hi - est.value);
        if (est.eps <= eps) {
            if (est.value < 0.0) est.value = 0.0;
            if (est.value > 1.0) est.value = 1.0;
            return CapacityResult{CapacityStatus::ok, est};
        }
        tol /= 4; // outward rounding ate the margin; tighten and retry
    }
}

} // namespace

CapacityResult capacity(const GenFun& f, double eps) {
    if (f.degenerate()) return CapacityResult{};
    return capacity_from_poly(f.S, f.q, eps, CapacityEstimate::Method::cluster);
}

CapacityResult capacity_spectral(const ForbiddenSet& f, double eps, size_t max_vertices) {
    DeBruijnGraph g = build_debruijn(f);
    if (g.m() == 0 || !g.has_cycle()) return CapacityResult{};
    GraphDets dets = det_poly(g, max_vertices);
    return capacity_from_poly(dets.det_shift, f.q(), eps,
                              CapacityEstimate::Method::spectral);
}

std::vector<std::vector<double>> companion_matrix(const RatPoly& h) {
    if (h.degree() < 1) throw InputError("companion_matrix: degree must be at least 1");
    if (!h.is_monic()) throw InputError("companion_matrix: polynomial must be monic");
    const size_t n = static_cast<size_t>(h.degree());
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i + 1 < n; ++i) m[i + 1][i] = 1.0;
    for (size_t i = 0; i < n; ++i) m[i][n - 1] = -h.coeff(i).get_d();
    return m;
}

double lpa_capacity_bound(int q, int ell, int p) {
    if (q < 2 || p < 2 || ell < p) throw InputError("lpa_capacity_bound: bad parameters");
    double logq_e = 1.0 / std::log(static_cast<double>(q));
    return 1.0 - (static_cast<double>(q - 1) * (q - 1)) * logq_e /
                     (2.0 * std::pow(static_cast<double>(q), ell - p + 3));
}

} // namespace ccap
