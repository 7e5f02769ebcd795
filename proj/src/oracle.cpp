#include "shellpol/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "shellpol/errors.hpp"
#include "shellpol/polarizability.hpp"

namespace shellpol::oracle {

namespace {

const double kInvSqrt4Pi = 1.0 / std::sqrt(4.0 * std::numbers::pi);

double composite_simpson(const std::vector<double>& y, int first, int last, double h) {
    // last - first must be even
    double sum = y[first] + y[last];
    for (int i = first + 1; i < last; ++i) sum += (i - first) % 2 == 1 ? 4.0 * y[i] : 2.0 * y[i];
    return sum * h / 3.0;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    return gauss_kronrod<double, 61>::integrate(f, a, b, 20, rel_tol, &error);
}

RadialGrid RadialGrid::make(double rho_max, int points_per_unit) {
    if (!(rho_max > 1.0)) throw InvalidArgument("grid must extend beyond rho = 1");
    if (points_per_unit < 2) throw InvalidArgument("points_per_unit must be at least 2");
    RadialGrid g;
    const int units = static_cast<int>(std::ceil(rho_max));
    g.points_per_unit = points_per_unit + points_per_unit % 2;
    g.rho_max = units;
    g.n = units * g.points_per_unit;
    g.interface_index = g.points_per_unit;
    if (g.n < 1000) {
        throw InvalidArgument("grid has " + std::to_string(g.n) + " intervals; at least 1000 required");
    }
    return g;
}

RadialGrid RadialGrid::for_state(double x0) {
    const int ppu = static_cast<int>(std::ceil(2000.0 * std::max(1.0, x0)));
    return make(exterior_cutoff(x0), ppu);
}

ReferenceGroundState::ReferenceGroundState(double x0) : x_(x0), norm_(1.0) {
    const auto sq = [this](double r) {
        const double v = shape(r);
        return v * v;
    };
    const double total = integrate(sq, 0.0, 1.0) +
                         integrate(sq, 1.0, std::numeric_limits<double>::infinity());
    norm_ = 1.0 / std::sqrt(total);
}

double ReferenceGroundState::shape(double rho) const {
    // e^{-x} sinh(x rho) inside, sinh(x) e^{-x rho} outside
    if (rho < 1.0) return 0.5 * (std::exp(-x_ * (1.0 - rho)) - std::exp(-x_ * (1.0 + rho)));
    return 0.5 * (std::exp(-x_ * (rho - 1.0)) - std::exp(-x_ * (rho + 1.0)));
}

double ReferenceGroundState::operator()(double rho) const { return norm_ * shape(rho); }

ReferencePState::ReferencePState(double x1) : x_(x1), norm_(1.0) {
    const auto sq = [this](double r) {
        const double v = shape(r);
        return v * v;
    };
    const double total = integrate(sq, 0.0, 1.0) +
                         integrate(sq, 1.0, std::numeric_limits<double>::infinity());
    norm_ = 1.0 / std::sqrt(total);
}

double ReferencePState::shape(double rho) const {
    // (1 + 1/x) e^{-x} (cosh u - sinh u / u) inside, (cosh x - sinh x / x)(1 + 1/u) e^{-u} outside
    if (rho <= 0.0) return 0.0;
    const double u = x_ * rho;
    if (rho < 1.0) {
        const double bracket = std::exp(-x_ * (1.0 - rho)) * (1.0 - 1.0 / u) +
                               std::exp(-x_ * (1.0 + rho)) * (1.0 + 1.0 / u);
        return 0.5 * (1.0 + 1.0 / x_) * bracket;
    }
    const double at_shell = 0.5 * ((1.0 - 1.0 / x_) + std::exp(-2.0 * x_) * (1.0 + 1.0 / x_));
    return at_shell * (1.0 + 1.0 / u) * std::exp(-x_ * (rho - 1.0));
}

double ReferencePState::operator()(double rho) const { return norm_ * shape(rho); }

RadialProfile BvpSolution::profile() const {
    RadialProfile p;
    p.kind = ProfileKind::s;
    p.ell = 1;
    p.samples.reserve(values.size());
    for (int i = 0; i <= grid.n; ++i) p.samples.push_back({grid.node(i), values[i]});
    return p;
}

// Interior rows:  (S[i-1] - 2 S[i] + S[i+1]) / h^2 - (x0^2 + 2/rho^2) S[i] = f(rho_i)
// Shell row:      same, with an extra -gamma/h on the diagonal. It follows from
//   S'(1+) = (S[J+1] - S[J]) / h - h/2 S''(1+),  S'(1-) = (S[J] - S[J-1]) / h + h/2 S''(1-)
// inserted into S'(1+) - S'(1-) = gamma S(1); second order like the interior rows.
BvpSolution solve_phi_bvp(const Coupling& coupling, const BoundState& s0, const RadialGrid& grid,
                          bool zero_source) {
    const int n = grid.n;
    const double h = grid.h();
    const double inv_h2 = 1.0 / (h * h);
    const double x2 = s0.x * s0.x;
    const ReferenceGroundState psi0(s0.x);

    // unknowns i = 1 .. n-1
    const int m = n - 1;
    std::vector<double> diag(m), rhs(m);
    for (int k = 0; k < m; ++k) {
        const int i = k + 1;
        const double rho = grid.node(i);
        diag[k] = -2.0 * inv_h2 - x2 - 2.0 / (rho * rho);
        if (i == grid.interface_index) diag[k] -= coupling.gamma() / h;
        rhs[k] = zero_source ? 0.0 : -rho * psi0(rho) * kInvSqrt4Pi;
    }

    // Thomas elimination; off-diagonals are all 1/h^2.
    std::vector<double> cprime(m), dprime(m);
    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::abs(d));
    for (int k = 0; k < m; ++k) {
        const double pivot = k == 0 ? diag[0] : diag[k] - inv_h2 * cprime[k - 1];
        if (std::abs(pivot) <= 1e-14 * scale) {
            throw SingularSystem("zero pivot at node " + std::to_string(k + 1) +
                                 "; enlarge rho_max or refine the grid");
        }
        cprime[k] = inv_h2 / pivot;
        dprime[k] = (rhs[k] - (k == 0 ? 0.0 : inv_h2 * dprime[k - 1])) / pivot;
    }
    BvpSolution sol;
    sol.grid = grid;
    sol.values.assign(n + 1, 0.0);
    sol.values[m] = dprime[m - 1];
    for (int k = m - 2; k >= 0; --k) sol.values[k + 1] = dprime[k] - cprime[k] * sol.values[k + 2];

    // Relative residual of the discrete system.
    double res = 0.0, smax = 0.0, fmax = 0.0;
    for (int k = 0; k < m; ++k) {
        const int i = k + 1;
        const double lhs = inv_h2 * (sol.values[i - 1] + sol.values[i + 1]) + diag[k] * sol.values[i];
        res = std::max(res, std::abs(lhs - rhs[k]));
        smax = std::max(smax, std::abs(sol.values[i]));
        fmax = std::max(fmax, std::abs(rhs[k]));
    }
    const double denom = scale * smax + fmax;
    sol.relative_residual = denom > 0.0 ? res / denom : 0.0;
    return sol;
}

double alpha_from_quadrature(const BoundState& s0, const BvpSolution& solution) {
    const RadialGrid& g = solution.grid;
    const ReferenceGroundState psi0(s0.x);
    std::vector<double> y(g.n + 1);
    for (int i = 0; i <= g.n; ++i) {
        const double rho = g.node(i);
        y[i] = rho * psi0(rho) * solution.values[i];
    }
    const double radial = composite_simpson(y, 0, g.interface_index, g.h()) +
                          composite_simpson(y, g.interface_index, g.n, g.h());
    return 2.0 * std::sqrt(4.0 * std::numbers::pi) / 3.0 * radial;
}

BvpAlphaEstimate alpha_bvp(const Coupling& coupling, const BoundState& s0,
                           int base_points_per_unit) {
    const int base = base_points_per_unit > 0
                         ? base_points_per_unit
                         : static_cast<int>(std::ceil(500.0 * std::max(1.0, s0.x)));
    BvpAlphaEstimate est;
    for (int level = 0; level < 3; ++level) {
        const RadialGrid grid = RadialGrid::make(exterior_cutoff(s0.x), base << level);
        est.levels[level] = alpha_from_quadrature(s0, solve_phi_bvp(coupling, s0, grid));
    }
    est.alpha = (4.0 * est.levels[2] - est.levels[1]) / 3.0;
    est.observed_order = std::log2(std::abs((est.levels[0] - est.levels[1]) /
                                            (est.levels[1] - est.levels[2])));
    return est;
}

double alpha_from_quadrature(const BoundState& s0, const std::function<double(double)>& profile,
                             double rel_tol) {
    const ReferenceGroundState psi0(s0.x);
    const auto f = [&](double rho) { return rho * psi0(rho) * profile(rho); };
    const double radial =
        integrate(f, 0.0, 1.0, rel_tol) + integrate(f, 1.0, exterior_cutoff(s0.x), rel_tol);
    return 2.0 * std::sqrt(4.0 * std::numbers::pi) / 3.0 * radial;
}

double radial_dipole_element(const BoundState& s0, const BoundState& s1) {
    const ReferenceGroundState psi0(s0.x);
    const ReferencePState psi1(s1.x);
    const auto f = [&](double rho) { return psi0(rho) * rho * psi1(rho); };
    return integrate(f, 0.0, 1.0) + integrate(f, 1.0, std::numeric_limits<double>::infinity());
}

double angular_factor() {
    // Y00 = 1/sqrt(4 pi), Y10 = sqrt(3/(4 pi)) cos(theta)
    const double y00 = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    const double y10 = std::sqrt(3.0 / (4.0 * std::numbers::pi));
    const double m = 2.0 * std::numbers::pi *
                     integrate(
                         [&](double t) {
                             const double c = std::cos(t);
                             return y00 * c * y10 * c * std::sin(t);
                         },
                         0.0, std::numbers::pi);
    return m * m;
}

double alpha_bb_direct(const BoundState& s0, const BoundState& s1) {
    const double m = radial_dipole_element(s0, s1);
    const double gap = s1.energy_reduced() - s0.energy_reduced();
    return 2.0 * angular_factor() * m * m / gap;
}

}  // namespace shellpol::oracle
