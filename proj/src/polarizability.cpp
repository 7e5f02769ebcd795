#include "shellpol/polarizability.hpp"

#include <cmath>
#include <numbers>

#include "shellpol/errors.hpp"
#include "shellpol/hyperbolic.hpp"
#include "shellpol/quadrature.hpp"

namespace shellpol {

namespace {

// Angular reduction of <psi0| -eps r cos(theta) |phi> with
//   psi0 = Q0(rho) / (rho sqrt(4 pi)),  phi = eps S(rho) cos(theta) / rho:
//   Delta E0 = -eps^2 / sqrt(4 pi) * (int cos^2 dOmega = 4 pi / 3) * int rho Q0 S drho
//            = -eps^2 sqrt(4 pi) / 3 * int rho Q0 S drho
// and alpha = -2 Delta E0 / eps^2.
const double kAlphaPerRadialIntegral = 2.0 * std::sqrt(4.0 * std::numbers::pi) / 3.0;

}  // namespace

double exterior_cutoff(double x0) {
    const double span = 40.0 / x0;
    return 1.0 + (x0 < 0.1 ? 2.0 * span : span);
}

double alpha_closed_form(const Coupling& coupling) {
    return alpha_closed_form(coupling, ground_state(coupling));
}

// alpha = -(2/3) F / Den with
//   F   = (-3 + x(-12 + x(-21 + 2x(-5 + 4x(1+x))))) gamma
//         + 2 e^{2x} (x^3 (15 + 2x(15 + 4x(3+x))) + (3 + x(6 + x(6 + x(-1 + 2x(1+2x))))) gamma)
//         + e^{4x} (-3 gamma + x^2 (-3 gamma + 2x(-15 + 2x(6x + gamma))))
//   Den = 16 x^4 (1 - e^{2x} + 2x) ((1+x)^2 gamma + e^{2x} (-gamma + x^2 (2x + gamma)))
// evaluated with e^{4x} divided out of both.
double alpha_closed_form(const Coupling& coupling, const BoundState& s0) {
    const double x = s0.x;
    const double g = coupling.gamma();
    const double e = std::exp(-2.0 * x);

    const double p0 = (-3.0 + x * (-12.0 + x * (-21.0 + 2.0 * x * (-5.0 + 4.0 * x * (1.0 + x))))) * g;
    const double p1 =
        2.0 * (x * x * x * (15.0 + 2.0 * x * (15.0 + 4.0 * x * (3.0 + x))) +
               (3.0 + x * (6.0 + x * (6.0 + x * (-1.0 + 2.0 * x * (1.0 + 2.0 * x))))) * g);
    const double p2 = -3.0 * g + x * x * (-3.0 * g + 2.0 * x * (-15.0 + 2.0 * x * (6.0 * x + g)));
    const double num = (p0 * e + p1) * e + p2;

    const double x2 = x * x;
    const double den = 16.0 * x2 * x2 * (-hyp::one_minus_1p2x_exp(x)) *
                       ((1.0 + x) * (1.0 + x) * g * e + (-g + x2 * (2.0 * x + g)));
    if (std::abs(den) < 1e-300) {
        throw DegenerateDenominator("alpha denominator vanishes at x0 = " + std::to_string(x));
    }
    return -2.0 / 3.0 * num / den;
}

RegionSplit alpha_regions(const BoundState& s0, const MatchingCoefficients& coeffs,
                          double rel_tol) {
    const auto integrand = [&](double rho) { return rho * q0(rho, s0) * s_profile(rho, coeffs); };
    // The inner integrand vanishes like rho^3 at the origin; start there directly.
    const auto inner = quad::adaptive_simpson(
        [&](double rho) { return rho > 0.0 ? integrand(rho) : 0.0; }, 0.0, 1.0, rel_tol);
    const auto outer = quad::adaptive_simpson(integrand, 1.0, exterior_cutoff(s0.x), rel_tol);
    return {kAlphaPerRadialIntegral * inner.value, kAlphaPerRadialIntegral * outer.value,
            kAlphaPerRadialIntegral * (inner.error + outer.error)};
}

double alpha_bound_bound(const Coupling& coupling) {
    auto [s0, s1] = state_pair(coupling);
    if (!s1) throw NoPState(coupling.abs());
    return alpha_bound_bound(s0, *s1);
}

// alpha_b = (8/3) (-k0 I^2) / [(k0-k1)^5 k1 (k0+k1)^5 (1 - e^{2k0} + 2k0)
//                              (3 + 6k1 + 5k1^2 + 2k1^3 + e^{2k1}(-3 + k1^2))] * e^{-2(k0+k1)}
// with I = -e^{2k1} k1^3 (-2 - 2k0 - k0^2 + k1^2)
//          + e^{2(k0+k1)} (k0-k1)^2 (-k0 - 2k1 + k0 k1^2 + k1^3)
//          + e^{2k0} k0 (1+k1) (k0^2 (1+k1) - k1^2 (3+k1)),
// all in units r0 = 1 and with e^{2(k0+k1)} divided out of I.
double alpha_bound_bound(const BoundState& s0, const BoundState& s1) {
    const double k0 = s0.x;
    const double k1 = s1.x;
    const double e0 = std::exp(-2.0 * k0);
    const double e1 = std::exp(-2.0 * k1);
    const double dk = k0 - k1;
    const double sk = k0 + k1;

    const double inner = -e0 * k1 * k1 * k1 * (-2.0 - 2.0 * k0 - k0 * k0 + k1 * k1) +
                         dk * dk * (-k0 - 2.0 * k1 + k0 * k1 * k1 + k1 * k1 * k1) +
                         e1 * k0 * (1.0 + k1) * (k0 * k0 * (1.0 + k1) - k1 * k1 * (3.0 + k1));
    const double dk5 = dk * dk * dk * dk * dk;
    const double sk5 = sk * sk * sk * sk * sk;
    const double den = dk5 * k1 * sk5 * (-hyp::one_minus_1p2x_exp(k0)) * hyp::p_norm_denominator(k1);
    if (std::abs(den) < 1e-300) {
        throw DegenerateDenominator("alpha_b denominator vanishes at x0 = " + std::to_string(k0));
    }
    return 8.0 / 3.0 * (-k0 * inner * inner) / den;
}

double delta_e0(double alpha, double eps) {
    return -0.5 * alpha * eps * eps;
}

double delta_e0_direct(const BoundState& s0, const MatchingCoefficients& coeffs, double eps,
                       double rel_tol) {
    const auto radial_integrand = [&](double rho) {
        return rho > 0.0 ? rho * q0(rho, s0) * s_profile(rho, coeffs) : 0.0;
    };
    const double radial = quad::adaptive_simpson(radial_integrand, 0.0, 1.0, rel_tol).value +
                          quad::adaptive_simpson(radial_integrand, 1.0,
                                                 exterior_cutoff(s0.x), rel_tol)
                              .value;
    // 2 pi int_0^pi cos^2(theta) sin(theta) dtheta
    const double angular =
        2.0 * std::numbers::pi *
        quad::adaptive_simpson(
            [](double t) {
                const double c = std::cos(t);
                return c * c * std::sin(t);
            },
            0.0, std::numbers::pi, 1e-14)
            .value;
    const double y00 = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    return -eps * eps * y00 * angular * radial;
}

AlphaBreakdown analyze(const Coupling& coupling, const AnalysisOptions& opts) {
    AlphaBreakdown b;
    auto [s0, s1] = state_pair(coupling, opts.root_tol);
    b.s0 = s0;
    b.s1 = s1;
    b.alpha_closed = alpha_closed_form(coupling, s0);
    const MatchingCoefficients coeffs = matching_coefficients(coupling, s0);
    const RegionSplit split = alpha_regions(s0, coeffs, opts.quad_tol);
    b.alpha1 = split.alpha1;
    b.alpha2 = split.alpha2;
    b.alpha_quad = split.alpha1 + split.alpha2;
    if (s1) b.alpha_b = alpha_bound_bound(s0, *s1);
    b.delta_e0_per_eps2 = delta_e0(b.alpha_closed, 1.0);
    return b;
}

PolarizabilityReport make_report(const PhysicalParams& params, const AlphaBreakdown& b,
                                  CoulombRounding rounding) {
    const double unit = params.polarizability_unit();
    const auto to_m3 = [&](double a) { return alpha_to_m3(a * unit, rounding); };
    PolarizabilityReport r;
    r.alpha_dimensionless = b.alpha_closed;
    r.alpha_m3 = to_m3(b.alpha_closed);
    r.alpha1_m3 = to_m3(b.alpha1);
    r.alpha2_m3 = to_m3(b.alpha2);
    if (b.alpha_b) r.alpha_b_m3 = to_m3(*b.alpha_b);
    return r;
}

}  // namespace shellpol
