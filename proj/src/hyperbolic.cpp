#include "shellpol/hyperbolic.hpp"

#include <array>
#include <cmath>

namespace shellpol::hyp {

namespace {

constexpr int kMaxTerms = 60;
constexpr double kSeriesEps = 1e-18;

// 2k / (2k+1)! for k >= 1, i.e. the Taylor coefficients of cosh u - sinh u / u.
double sa_series(double u) {
    const double u2 = u * u;
    double term = u2 / 3.0;  // k = 1
    double sum = term;
    for (int k = 2; k < kMaxTerms; ++k) {
        // ratio of consecutive coefficients: [2k/(2k+1)!] / [2(k-1)/(2k-1)!]
        term *= u2 * static_cast<double>(k) /
                (static_cast<double>(k - 1) * (2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
    }
    return sum;
}

double sa_prime_series(double u) {
    const double u2 = u * u;
    double coef = 1.0 / 3.0;  // a_1
    double upow = u;          // u^{2k-1}
    double sum = 2.0 * coef * upow;
    for (int k = 2; k < kMaxTerms; ++k) {
        coef *= static_cast<double>(k) /
                (static_cast<double>(k - 1) * (2.0 * k) * (2.0 * k + 1.0));
        upow *= u2;
        const double term = 2.0 * k * coef * upow;
        sum += term;
        if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
    }
    return sum;
}

// sum_{k>=1} c_k u^{2k+1}, c_k = 2/(2k-2)! - 3/(2k)! + 3/(2k+1)!
double inner_bracket_series(double u) {
    const double u2 = u * u;
    double upow = u * u2;  // u^3
    double f2km2 = 1.0;    // (2k-2)!
    double sum = 0.0;
    for (int k = 1; k < kMaxTerms; ++k) {
        const double f2k = f2km2 * (2.0 * k - 1.0) * (2.0 * k);
        const double f2kp1 = f2k * (2.0 * k + 1.0);
        const double term = (2.0 / f2km2 - 3.0 / f2k + 3.0 / f2kp1) * upow;
        sum += term;
        if (k > 1 && std::abs(term) < kSeriesEps * std::abs(sum)) break;
        upow *= u2;
        f2km2 = f2k;
    }
    return sum;
}

}  // namespace

double sinh_scaled(double u, double shift) {
    // (e^{u} - e^{-u}) / 2 * e^{-shift} = e^{u-shift} (1 - e^{-2u}) / 2
    return -0.5 * std::exp(u - shift) * std::expm1(-2.0 * u);
}

double cosh_scaled(double u, double shift) {
    return 0.5 * (std::exp(u - shift) + std::exp(-u - shift));
}

double sa_scaled(double u, double shift) {
    if (u < kSeriesSwitch) return sa_series(u) * std::exp(-shift);
    const double e2 = std::exp(-2.0 * u);
    return std::exp(u - shift) * (0.5 * (1.0 + e2) + 0.5 * std::expm1(-2.0 * u) / u);
}

double sa_prime_scaled(double u, double shift) {
    if (u < kSeriesSwitch) return sa_prime_series(u) * std::exp(-shift);
    const double e2 = std::exp(-2.0 * u);
    const double sh = -0.5 * std::expm1(-2.0 * u);
    const double ch = 0.5 * (1.0 + e2);
    return std::exp(u - shift) * (sh - ch / u + sh / (u * u));
}

double inner_bracket_scaled(double u, double shift) {
    if (u < kSeriesSwitch) return inner_bracket_series(u) * std::exp(-shift);
    return (-3.0 * u + 2.0 * u * u * u) * cosh_scaled(u, shift) + 3.0 * sinh_scaled(u, shift);
}

double one_minus_1p2x_exp(double x) {
    if (x < kSeriesSwitch) {
        // sum_{k>=2} (-1)^k (k-1) t^k / k!, t = 2x
        const double t = 2.0 * x;
        double tk_over_fact = t * t / 2.0;
        double sum = tk_over_fact;  // k = 2
        for (int k = 3; k < kMaxTerms; ++k) {
            tk_over_fact *= -t / k;
            const double term = (k - 1) * tk_over_fact;
            sum += term;
            if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
        }
        return sum;
    }
    return 1.0 - (1.0 + 2.0 * x) * std::exp(-2.0 * x);
}

double p_norm_denominator(double x) {
    if (x < kSeriesSwitch) {
        // coefficient of x^k: 3 c_k + 6 c_{k-1} + 5 c_{k-2} + 2 c_{k-3}, c_n = (-2)^n / n!.
        // Orders below 5 cancel identically and are skipped.
        std::array<double, kMaxTerms + 1> c{};
        c[0] = 1.0;
        for (int n = 1; n <= kMaxTerms; ++n) c[n] = c[n - 1] * -2.0 / n;
        double sum = 0.0;
        double xk = std::pow(x, 5);
        for (int k = 5; k <= kMaxTerms; ++k) {
            const double coef = 3.0 * c[k] + 6.0 * c[k - 1] + 5.0 * c[k - 2] + 2.0 * c[k - 3];
            const double term = coef * xk;
            sum += term;
            if (k > 6 && std::abs(term) < kSeriesEps * std::abs(sum)) break;
            xk *= x;
        }
        return sum;
    }
    return x * x - 3.0 + (((2.0 * x + 5.0) * x + 6.0) * x + 3.0) * std::exp(-2.0 * x);
}

}  // namespace shellpol::hyp
