#pragma once

#include <optional>

#include "shellpol/model.hpp"
#include "shellpol/spectrum.hpp"
#include "shellpol/wavefunctions.hpp"

namespace shellpol {

// All polarizabilities here are reduced: alpha_SI = alpha * q^2 (2m/hbar^2) r0^4
// (see PhysicalParams::polarizability_unit). At fixed gamma, alpha_SI therefore
// scales as r0^4.

inline constexpr double kDefaultQuadTol = 1e-10;

/// Exterior truncation rho_max = 1 + 40/x0, doubled in span when x0 < 0.1.
double exterior_cutoff(double x0);

/// Closed-form alpha(x0, gamma). Throws NoBoundState below threshold.
double alpha_closed_form(const Coupling& coupling);
double alpha_closed_form(const Coupling& coupling, const BoundState& s0);

struct RegionSplit {
    double alpha1 = 0.0;  // rho < 1
    double alpha2 = 0.0;  // rho > 1
    double error = 0.0;   // quadrature error estimate on alpha1 + alpha2
};

/// Region decomposition of alpha by quadrature of rho Q0 S.
RegionSplit alpha_regions(const BoundState& s0, const MatchingCoefficients& coeffs,
                          double rel_tol = kDefaultQuadTol);

/// Closed-form bound-to-bound polarizability. Throws NoPState when |gamma| <= 3.
double alpha_bound_bound(const Coupling& coupling);
double alpha_bound_bound(const BoundState& s0, const BoundState& s1);

/// Second-order shift -alpha eps^2 / 2 (reduced units, eps in units of the
/// reduced field).
double delta_e0(double alpha, double eps);

/// Second-order shift from <psi0| -eps r cos(theta) |phi>, radial and angular
/// integrals done numerically.
double delta_e0_direct(const BoundState& s0, const MatchingCoefficients& coeffs, double eps,
                       double rel_tol = kDefaultQuadTol);

struct AlphaBreakdown {
    BoundState s0;
    std::optional<BoundState> s1;
    double alpha_closed = 0.0;
    double alpha_quad = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    std::optional<double> alpha_b;
    double delta_e0_per_eps2 = 0.0;
};

struct AnalysisOptions {
    double root_tol = kDefaultRootTol;
    double quad_tol = kDefaultQuadTol;
};

/// Everything for one gamma. Throws NoBoundState when |gamma| <= 1.
AlphaBreakdown analyze(const Coupling& coupling, const AnalysisOptions& opts = {});

/// SI report (m^3) for one gamma.
PolarizabilityReport make_report(const PhysicalParams& params, const AlphaBreakdown& breakdown,
                                  CoulombRounding rounding = CoulombRounding::exact);

}  // namespace shellpol
