#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "shellpol/model.hpp"
#include "shellpol/spectrum.hpp"

namespace shellpol {

// Radial functions are evaluated in rho = r / r0 and normalized in rho-units:
// int_0^inf Q(rho)^2 drho = 1. A physical Q(r) is Q(r / r0) / sqrt(r0).
//
// The Dalgarno-Lewis profile S solves, in the reduced convention
// (q = eps = 1, 2m/hbar^2 = 1, r0 = 1),
//
//   (-x0^2 + d^2/drho^2 - 2/rho^2) S = -rho Q0(rho) / sqrt(4 pi)
//
// away from rho = 1, with S continuous and S'(1+) - S'(1-) = gamma S(1).
// The first-order correction is phi = (S / rho) cos(theta).

/// Selects which branch formula to use; at rho = 1 this gives one-sided limits.
enum class Side { inner, outer };

/// Branch that owns rho (rho == 1 belongs to the outer branch).
constexpr Side side_of(double rho) noexcept { return rho < 1.0 ? Side::inner : Side::outer; }

/// N0 for the s-wave state, rho-units.
double ground_norm(double x0);

/// N1 for the p-wave state, rho-units.
double p_norm(double x1);

double q0(double rho, const BoundState& s0);
double q0_branch(double rho, const BoundState& s0, Side side);
double q0_derivative(double rho, const BoundState& s0, Side side);

double q1(double rho, const BoundState& s1);
double q1_branch(double rho, const BoundState& s1, Side side);
double q1_derivative(double rho, const BoundState& s1, Side side);

struct HomogeneousPair {
    double sa = 0.0;  // cosh u - sinh u / u
    double sb = 0.0;  // sinh u - cosh u / u
};

/// Regular-at-origin and irregular solutions of (-1 + d^2/du^2 - 2/u^2) s = 0.
HomogeneousPair homogeneous_pair(double u);

/// Matching data for S. The raw C, D, G1, G2 scale like e^{+-x0}, so they are
/// stored with that exponential factored out.
struct MatchingCoefficients {
    double x0 = 0.0;
    double c_scaled = 0.0;   // C e^{x0}
    double d_scaled = 0.0;   // D e^{-x0}
    double g1_scaled = 0.0;  // G1 e^{x0}  = -N0 / sqrt(4 pi)
    double g2_scaled = 0.0;  // G2 e^{-x0} = -N0 / sqrt(4 pi) * (1 - e^{-2 x0}) / 2

    [[nodiscard]] double c() const;
    [[nodiscard]] double d() const;
    [[nodiscard]] double g1() const;
    [[nodiscard]] double g2() const;
};

/// Closed-form C and D for the ground state. Throws DegenerateDenominator when
/// a denominator collapses below 1e-300.
MatchingCoefficients matching_coefficients(const Coupling& coupling, const BoundState& s0);

double s_profile(double rho, const MatchingCoefficients& coeffs);
double s_branch(double rho, const MatchingCoefficients& coeffs, Side side);
double s_derivative(double rho, const MatchingCoefficients& coeffs, Side side);

/// Right-hand side of the inhomogeneous equation, -rho Q0(rho) / sqrt(4 pi).
double s_source(double rho, const BoundState& s0);

enum class ProfileKind { q0, q1, s, sa, sb };

std::string_view to_string(ProfileKind kind);

struct Sample {
    double rho = 0.0;
    double value = 0.0;
};

struct RadialProfile {
    ProfileKind kind = ProfileKind::q0;
    int ell = 0;
    std::vector<Sample> samples;
};

/// Samples one of the functions above on the given rho points. sa/sb are
/// evaluated at u = x0 rho. Throws NoPState for q1 below the p-wave threshold.
RadialProfile sample_profile(ProfileKind kind, const Coupling& coupling,
                             std::span<const double> rhos);

}  // namespace shellpol
