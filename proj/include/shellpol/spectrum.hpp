#pragma once

#include <optional>
#include <utility>

#include "shellpol/model.hpp"

namespace shellpol {

/// Default bisection bracket width for both eigenvalue equations.
inline constexpr double kDefaultRootTol = 1e-14;

struct BoundState {
    int ell = 0;
    double x = 0.0;         // k r0
    double residual = 0.0;  // |defining equation| at x

    /// Reduced energy, units of hbar^2 / (2 m r0^2).
    [[nodiscard]] double energy_reduced() const noexcept { return -x * x; }
    [[nodiscard]] double energy_joules(const PhysicalParams& params) const {
        return energy_reduced() * params.energy_unit();
    }
};

/// 2x/|gamma| - (1 - e^{-2x}); the s-wave eigenvalue equation with gamma < 0.
double ground_state_residual(double x, double gamma_abs);

/// x/|gamma| - (1 + 1/x)(cosh x - sinh x / x) e^{-x}; the p-wave eigenvalue equation.
double p_state_residual(double x, double gamma_abs);

/// s-wave bound state. Throws NoBoundState when |gamma| <= 1.
BoundState ground_state(const Coupling& coupling, double tol = kDefaultRootTol);

/// p-wave bound state. Throws NoPState when |gamma| <= 3.
BoundState p_state(const Coupling& coupling, double tol = kDefaultRootTol);

/// Ground state plus the p-state when it exists. Throws NoBoundState when |gamma| <= 1.
std::pair<BoundState, std::optional<BoundState>> state_pair(const Coupling& coupling,
                                                            double tol = kDefaultRootTol);

}  // namespace shellpol
