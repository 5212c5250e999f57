#pragma once

#include <cmath>
#include <stdexcept>

namespace entrobound {

struct ScalarMin {
    double x;
    double fx;
};

/// Golden-section minimization of a unimodal f on [lo, hi] until the bracket
/// is narrower than `tol`.
template <class F>
ScalarMin golden_section_min(F&& f, double lo, double hi, double tol, int max_iter = 500) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = fc <= fd ? c : d;
    return {x, fc <= fd ? fc : fd};
}

/// Bisection for a root of f on [lo, hi]. Requires a sign change at the ends.
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol, int max_iter = 200) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw std::invalid_argument("bisect_root: no sign change on bracket");
    for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace entrobound
