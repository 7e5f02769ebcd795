#include "shellpol/wavefunctions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shellpol/errors.hpp"
#include "shellpol/hyperbolic.hpp"

namespace shellpol {

namespace {

constexpr double kDegenerateFloor = 1e-300;
constexpr double kPairSeriesSwitch = 1e-3;

const double kInvSqrt4Pi = 1.0 / std::sqrt(4.0 * std::numbers::pi);

}  // namespace

double ground_norm(double x0) {
    return 2.0 * std::sqrt(x0 / hyp::one_minus_1p2x_exp(x0));
}

double p_norm(double x1) {
    return std::sqrt(4.0 * x1 * x1 * x1 / hyp::p_norm_denominator(x1));
}

// Q0 inside:  N0 e^{-x} sinh(x rho)
// Q0 outside: N0 sinh(x) e^{-x rho}
double q0_branch(double rho, const BoundState& s0, Side side) {
    const double x = s0.x;
    const double n0 = ground_norm(x);
    if (side == Side::inner) return n0 * hyp::sinh_scaled(x * rho, x);
    return n0 * hyp::sinh_scaled(x, x) * std::exp(-x * (rho - 1.0));
}

double q0(double rho, const BoundState& s0) {
    return q0_branch(rho, s0, side_of(rho));
}

double q0_derivative(double rho, const BoundState& s0, Side side) {
    const double x = s0.x;
    const double n0 = ground_norm(x);
    if (side == Side::inner) return n0 * x * hyp::cosh_scaled(x * rho, x);
    return -n0 * x * hyp::sinh_scaled(x, x) * std::exp(-x * (rho - 1.0));
}

// Q1 inside:  N1 (1 + 1/x) sa(x rho) e^{-x}
// Q1 outside: N1 sa(x) (1 + 1/(x rho)) e^{-x rho}
double q1_branch(double rho, const BoundState& s1, Side side) {
    const double x = s1.x;
    const double n1 = p_norm(x);
    if (side == Side::inner) return n1 * (1.0 + 1.0 / x) * hyp::sa_scaled(x * rho, x);
    const double u = x * rho;
    return n1 * hyp::sa_scaled(x, x) * (1.0 + 1.0 / u) * std::exp(-x * (rho - 1.0));
}

double q1(double rho, const BoundState& s1) {
    return q1_branch(rho, s1, side_of(rho));
}

double q1_derivative(double rho, const BoundState& s1, Side side) {
    const double x = s1.x;
    const double n1 = p_norm(x);
    if (side == Side::inner) return n1 * (1.0 + 1.0 / x) * x * hyp::sa_prime_scaled(x * rho, x);
    const double u = x * rho;
    return n1 * hyp::sa_scaled(x, x) * x * (-1.0 / (u * u) - 1.0 / u - 1.0) *
           std::exp(-x * (rho - 1.0));
}

HomogeneousPair homogeneous_pair(double u) {
    if (u < kPairSeriesSwitch) {
        const double u2 = u * u;
        // sb = -1/u + u/2 + u^3/8 + u^5/144 + ...
        return {hyp::sa_scaled(u, 0.0), -1.0 / u + u * (0.5 + u2 * (0.125 + u2 / 144.0))};
    }
    return {hyp::sa_scaled(u, 0.0), std::sinh(u) - std::cosh(u) / u};
}

double MatchingCoefficients::c() const { return c_scaled * std::exp(-x0); }
double MatchingCoefficients::d() const { return d_scaled * std::exp(x0); }
double MatchingCoefficients::g1() const { return g1_scaled * std::exp(-x0); }
double MatchingCoefficients::g2() const { return g2_scaled * std::exp(x0); }

MatchingCoefficients matching_coefficients(const Coupling& coupling, const BoundState& s0) {
    const double x = s0.x;
    const double g = coupling.gamma();
    const double nt = ground_norm(x) * kInvSqrt4Pi;
    const double e = std::exp(-2.0 * x);

    MatchingCoefficients m;
    m.x0 = x;
    m.g1_scaled = -nt;
    m.g2_scaled = -nt * 0.5 * (1.0 - e);

    // C = N~ (A sinh x + B cosh x) / (4 x^3 [gamma (1+x)^2 + e^{2x} (-gamma + x^2 (2x + gamma))])
    // with e^{2x} divided out of numerator and denominator.
    {
        const double a = x * x * x * (3.0 + 2.0 * x * (3.0 + x)) + 3.0 * (1.0 + x) * g;
        const double b =
            x * (-3.0 * g + x * (-3.0 * g + x * (3.0 + 2.0 * g + 2.0 * x * (3.0 + x + g))));
        const double den = g * (1.0 + x) * (1.0 + x) * e + (-g + x * x * (2.0 * x + g));
        if (std::abs(den) < kDegenerateFloor) {
            throw DegenerateDenominator("C denominator vanishes at x0 = " + std::to_string(x));
        }
        m.c_scaled = nt * (a * (1.0 - e) + b * (1.0 + e)) / (8.0 * x * x * x * den);
    }

    // D = -N~ num / den, num ~ e^{2x}, den ~ e^{x}.
    {
        const double x2 = x * x;
        const double x3 = x2 * x;
        const double cosh2 = 0.25 * (1.0 + e) * (1.0 + e);
        const double sinh2 = 0.25 * (1.0 - e) * (1.0 - e);
        const double sinh_2x = 0.5 * (1.0 - e * e);
        const double num =
            -12.0 * x2 * x2 * cosh2 +
            2.0 * (2.0 * x3 * x2 + x3 * (3.0 - 2.0 * g) + 3.0 * g + 3.0 * x * g) * sinh2 +
            x * (-3.0 * g + x * (-3.0 * g + x * (3.0 + 2.0 * x * (-3.0 + x + g)))) * sinh_2x;
        const double den = 16.0 * x3 *
                           (x * (g + x * (x + g)) * 0.5 * (1.0 + e) +
                            (x3 - (1.0 + x) * g) * 0.5 * (1.0 - e));
        if (std::abs(den) < kDegenerateFloor) {
            throw DegenerateDenominator("D denominator vanishes at x0 = " + std::to_string(x));
        }
        m.d_scaled = -nt * num / den;
    }
    return m;
}

// Inside:  S = G1 / (8 x^4 rho) [(-3u + 2u^3) cosh u + 3 sinh u] + C sa(u)
// Outside: S = G2 / (8 x^4 rho) (3 + 3u - 2u^3) e^{-u} + D (1 + 1/u) e^{-u}
// with u = x rho.
double s_branch(double rho, const MatchingCoefficients& m, Side side) {
    const double x = m.x0;
    const double u = x * rho;
    const double x3 = x * x * x;
    if (side == Side::inner) {
        return m.g1_scaled * hyp::inner_bracket_scaled(u, x) / (8.0 * x3 * u) +
               m.c_scaled * hyp::sa_scaled(u, x);
    }
    const double decay = std::exp(-x * (rho - 1.0));
    return (m.g2_scaled * (3.0 + 3.0 * u - 2.0 * u * u * u) / (8.0 * x3 * u) +
            m.d_scaled * (1.0 + 1.0 / u)) *
           decay;
}

double s_profile(double rho, const MatchingCoefficients& m) {
    return s_branch(rho, m, side_of(rho));
}

double s_derivative(double rho, const MatchingCoefficients& m, Side side) {
    const double x = m.x0;
    const double u = x * rho;
    const double x3 = x * x * x;
    if (side == Side::inner) {
        // d/du [B(u)/u] = B'(u)/u - B(u)/u^2, B'(u) = 6u^2 cosh u + (2u^3 - 3u) sinh u
        const double bprime =
            6.0 * u * u * hyp::cosh_scaled(u, x) + (2.0 * u * u * u - 3.0 * u) * hyp::sinh_scaled(u, x);
        const double bracket = hyp::inner_bracket_scaled(u, x);
        const double dpart = bprime / u - bracket / (u * u);
        return x * (m.g1_scaled * dpart / (8.0 * x3) + m.c_scaled * hyp::sa_prime_scaled(u, x));
    }
    const double decay = std::exp(-x * (rho - 1.0));
    const double inv = 1.0 / u;
    const double dpart = -3.0 * inv * inv - 3.0 * inv - 3.0 - 4.0 * u + 2.0 * u * u;
    const double dhom = -inv * inv - inv - 1.0;
    return x * (m.g2_scaled * dpart / (8.0 * x3) + m.d_scaled * dhom) * decay;
}

double s_source(double rho, const BoundState& s0) {
    return -rho * q0(rho, s0) * kInvSqrt4Pi;
}

std::string_view to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::q0: return "q0";
        case ProfileKind::q1: return "q1";
        case ProfileKind::s: return "S";
        case ProfileKind::sa: return "sa";
        case ProfileKind::sb: return "sb";
    }
    return "?";
}

RadialProfile sample_profile(ProfileKind kind, const Coupling& coupling,
                             std::span<const double> rhos) {
    const BoundState s0 = ground_state(coupling);
    RadialProfile out;
    out.kind = kind;
    out.ell = kind == ProfileKind::q0 ? 0 : 1;
    out.samples.reserve(rhos.size());

    switch (kind) {
        case ProfileKind::q0:
            for (double r : rhos) out.samples.push_back({r, q0(r, s0)});
            break;
        case ProfileKind::q1: {
            const BoundState s1 = p_state(coupling);
            for (double r : rhos) out.samples.push_back({r, q1(r, s1)});
            break;
        }
        case ProfileKind::s: {
            const MatchingCoefficients m = matching_coefficients(coupling, s0);
            for (double r : rhos) out.samples.push_back({r, s_profile(r, m)});
            break;
        }
        case ProfileKind::sa:
            for (double r : rhos) out.samples.push_back({r, homogeneous_pair(s0.x * r).sa});
            break;
        case ProfileKind::sb:
            for (double r : rhos) out.samples.push_back({r, homogeneous_pair(s0.x * r).sb});
            break;
    }
    return out;
}

}  // namespace shellpol
