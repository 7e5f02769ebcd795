#pragma once

#include <functional>
#include <vector>

#include "shellpol/bisect.hpp"
#include "shellpol/model.hpp"
#include "shellpol/spectrum.hpp"
#include "shellpol/wavefunctions.hpp"

// Brute-force checks that share no evaluation path with the closed forms:
// bound states are rebuilt from their unnormalized branch shapes and
// normalized by quadrature, the Dalgarno-Lewis equation is solved by finite
// differences, and integrals use Gauss-Kronrod rather than adaptive Simpson.
namespace shellpol::oracle {

/// Uniform grid on [0, rho_max] with rho = 1 on a node. Unknowns live on the
/// interior nodes; the end nodes carry S = 0.
struct RadialGrid {
    double rho_max = 0.0;
    int n = 0;                // number of intervals
    int points_per_unit = 0;  // intervals per unit rho; even
    int interface_index = 0;  // node at rho = 1

    [[nodiscard]] double h() const { return 1.0 / points_per_unit; }
    [[nodiscard]] double node(int i) const { return static_cast<double>(i) / points_per_unit; }

    /// rho_max rounded up to an integer, points_per_unit rounded up to even.
    /// Throws InvalidArgument if that gives fewer than 1000 intervals.
    static RadialGrid make(double rho_max, int points_per_unit);

    /// Default grid for a ground state: rho_max from exterior_cutoff and
    /// spacing small enough that x0 h <= 5e-4.
    static RadialGrid for_state(double x0);
};

/// Ground state rebuilt from its branch shapes, normalized by quadrature.
class ReferenceGroundState {
public:
    explicit ReferenceGroundState(double x0);
    [[nodiscard]] double operator()(double rho) const;
    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] double norm() const { return norm_; }

private:
    [[nodiscard]] double shape(double rho) const;
    double x_;
    double norm_;
};

/// p-state rebuilt from its branch shapes, normalized by quadrature.
class ReferencePState {
public:
    explicit ReferencePState(double x1);
    [[nodiscard]] double operator()(double rho) const;
    [[nodiscard]] double x() const { return x_; }

private:
    [[nodiscard]] double shape(double rho) const;
    double x_;
    double norm_;
};

struct BvpSolution {
    RadialGrid grid;
    std::vector<double> values;  // S at nodes 0..n
    double relative_residual = 0.0;

    [[nodiscard]] RadialProfile profile() const;
};

/// Finite-difference solve of the inhomogeneous radial equation with the shell
/// jump condition. Throws SingularSystem if elimination hits a zero pivot.
BvpSolution solve_phi_bvp(const Coupling& coupling, const BoundState& s0, const RadialGrid& grid,
                          bool zero_source = false);

/// alpha from the grid samples of a BVP solution (composite Simpson per region).
double alpha_from_quadrature(const BoundState& s0, const BvpSolution& solution);

struct BvpAlphaEstimate {
    double alpha = 0.0;           // Richardson extrapolation of the two finest levels
    double levels[3] = {};        // alpha on grids h, h/2, h/4
    double observed_order = 0.0;  // log2 of successive error ratios
};

/// alpha from three nested BVP solves (spacing h, h/2, h/4), extrapolated in
/// h^2. base_points_per_unit = 0 picks 500 * max(1, x0).
BvpAlphaEstimate alpha_bvp(const Coupling& coupling, const BoundState& s0,
                           int base_points_per_unit = 0);

/// alpha from any callable profile S(rho) (Gauss-Kronrod per region).
double alpha_from_quadrature(const BoundState& s0, const std::function<double(double)>& profile,
                             double rel_tol = 1e-12);

/// int Q0 rho Q1 drho.
double radial_dipole_element(const BoundState& s0, const BoundState& s1);

/// |<Y00| cos(theta) |Y10>|^2 by quadrature; equals 1/3.
double angular_factor();

/// Single-term sum over states, 2 |<psi0|z|psi1>|^2 / (E1 - E0).
double alpha_bb_direct(const BoundState& s0, const BoundState& s1);

/// Gauss-Kronrod integral on [a, b] (b may be +inf).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12);

}  // namespace shellpol::oracle
