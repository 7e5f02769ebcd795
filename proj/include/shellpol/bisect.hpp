#pragma once

#include <cmath>

#include "shellpol/errors.hpp"

namespace shellpol::oracle {

struct BisectResult {
    double root = 0.0;
    double residual = 0.0;  // |f(root)|
    int iterations = 0;
};

/// Bracketed bisection. Requires f(lo) * f(hi) < 0; stops once the bracket is
/// narrower than tol or cannot be split further in double precision.
template <class F>
BisectResult bisect(F&& f, double lo, double hi, double tol) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if (!(flo * fhi < 0.0)) throw NoSignChange(lo, hi);

    int it = 0;
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double fmid = f(mid);
        ++it;
        if (fmid == 0.0) return {mid, 0.0, it};
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    const double root = lo + 0.5 * (hi - lo);
    return {root, std::abs(f(root)), it};
}

}  // namespace shellpol::oracle
