#include "shellpol/spectrum.hpp"

#include <cmath>

#include "shellpol/bisect.hpp"
#include "shellpol/errors.hpp"
#include "shellpol/hyperbolic.hpp"

namespace shellpol {

namespace {

constexpr double kGroundBracketLo = 1e-9;
constexpr double kPBracketLo = 1e-6;

// Bisect on [lo, hi]; if the bracket shows no sign change, widen hi once.
template <class F>
oracle::BisectResult bracketed_root(F&& f, double lo, double hi, double tol) {
    if (f(lo) * f(hi) >= 0.0) hi *= 2.0;
    return oracle::bisect(f, lo, hi, tol);
}

}  // namespace

double ground_state_residual(double x, double gamma_abs) {
    return 2.0 * x / gamma_abs + std::expm1(-2.0 * x);
}

double p_state_residual(double x, double gamma_abs) {
    // (cosh x - sinh x / x) e^{-x} via the scaled form
    return x / gamma_abs - (1.0 + 1.0 / x) * hyp::sa_scaled(x, x);
}

BoundState ground_state(const Coupling& coupling, double tol) {
    const double g = coupling.abs();
    if (!(g > 1.0)) throw NoBoundState(g);
    const auto f = [g](double x) { return ground_state_residual(x, g); };
    const auto r = bracketed_root(f, kGroundBracketLo, g, tol);
    return BoundState{0, r.root, r.residual};
}

BoundState p_state(const Coupling& coupling, double tol) {
    const double g = coupling.abs();
    if (!(g > 3.0)) throw NoPState(g);
    const auto f = [g](double x) { return p_state_residual(x, g); };
    const auto r = bracketed_root(f, kPBracketLo, g, tol);
    return BoundState{1, r.root, r.residual};
}

std::pair<BoundState, std::optional<BoundState>> state_pair(const Coupling& coupling,
                                                            double tol) {
    BoundState s0 = ground_state(coupling, tol);
    std::optional<BoundState> s1;
    if (coupling.abs() > 3.0) {
        s1 = p_state(coupling, tol);
        if (!(s1->x < s0.x)) {
            throw Error("p-state is not shallower than the ground state at |gamma| = " +
                        std::to_string(coupling.abs()));
        }
    }
    return {s0, s1};
}

}  // namespace shellpol
