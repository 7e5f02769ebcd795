#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace shellpol::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  // accumulated |S2 - S1| / 15 over accepted panels
    int evaluations = 0;
};

namespace detail {

template <class F>
struct Simpson {
    const F& f;
    double abs_tol;
    int max_depth;
    Result result{};

    double eval(double x) {
        ++result.evaluations;
        return f(x);
    }

    void recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth >= max_depth || std::abs(delta) <= 15.0 * tol) {
            result.value += left + right + delta / 15.0;
            result.error += std::abs(delta) / 15.0;
            return;
        }
        recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
        recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace detail

/// Adaptive Simpson with Richardson correction. The tolerance is
/// max(abs_tol, rel_tol * |coarse estimate|), the coarse estimate coming from a
/// 64-panel composite rule.
template <class F>
Result adaptive_simpson(const F& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                        int max_depth = 48) {
    constexpr int kPanels = 64;
    const double h = (b - a) / kPanels;
    double coarse = 0.0;
    std::array<double, 2 * kPanels + 1> fx{};
    for (int i = 0; i <= 2 * kPanels; ++i) fx[i] = f(a + 0.5 * h * i);
    for (int i = 0; i < kPanels; ++i) {
        coarse += h / 6.0 * (fx[2 * i] + 4.0 * fx[2 * i + 1] + fx[2 * i + 2]);
    }
    const double tol = std::max(abs_tol, rel_tol * std::abs(coarse));

    detail::Simpson<F> s{f, tol, max_depth};
    s.result.evaluations = 2 * kPanels + 1;
    for (int i = 0; i < kPanels; ++i) {
        const double pa = a + h * i;
        const double whole = h / 6.0 * (fx[2 * i] + 4.0 * fx[2 * i + 1] + fx[2 * i + 2]);
        s.recurse(pa, pa + h, fx[2 * i], fx[2 * i + 1], fx[2 * i + 2], whole, tol / kPanels, 0);
    }
    return s.result;
}

}  // namespace shellpol::quad
