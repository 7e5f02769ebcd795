#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <functional>
#include <limits>
#include <json.hpp>
#include <ostream>

#include "shellpol/cli.hpp"
#include "shellpol/oracle.hpp"

namespace shellpol::cli {

namespace {

using Fn = std::function<double(double)>;

// 10 points inside and 10 outside the shell, clear of rho = 1 and of the origin.
std::vector<double> residual_points(double x0) {
    std::vector<double> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(0.05 + 0.9 * i / 9.0);
    const double span = 4.0 / std::max(1.0, x0);
    for (int i = 0; i < 10; ++i) pts.push_back(1.05 + span * i / 9.0);
    return pts;
}

// max |f'' - (x^2 + l(l+1)/rho^2) f - src| / max(scale terms), five-point second
// difference with step 1e-2 in u = x rho.
double ode_residual(const Fn& f, const Fn& src, double x, int ell, bool scale_by_source) {
    const double h = 1e-2 / std::max(1.0, x);
    double worst = 0.0, scale = 0.0;
    for (double rho : residual_points(x)) {
        const double f0 = f(rho);
        const double d2 = (-f(rho + 2.0 * h) + 16.0 * f(rho + h) - 30.0 * f0 + 16.0 * f(rho - h) -
                           f(rho - 2.0 * h)) /
                          (12.0 * h * h);
        const double pot = (x * x + ell * (ell + 1) / (rho * rho)) * f0;
        worst = std::max(worst, std::abs(d2 - pot - src(rho)));
        scale = std::max(scale, scale_by_source ? std::abs(src(rho)) : std::abs(pot));
    }
    return worst / scale;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& opts) {
    VerifyReport rep;
    const auto add = [&](std::string name, double g, double measured, double tol) {
        rep.checks.push_back({std::move(name), g, measured, tol, measured < tol});
    };
    constexpr double inf = std::numeric_limits<double>::infinity();

    for (double g : opts.gamma_abs) {
        const Coupling coupling = Coupling::from_abs(g);
        const auto [s0, s1] = state_pair(coupling, opts.analysis.root_tol);
        MatchingCoefficients m = matching_coefficients(coupling, s0);
        m.c_scaled *= 1.0 + opts.perturb_coeff;
        m.d_scaled *= 1.0 + opts.perturb_coeff;

        add("root_residual_s", g, s0.residual, opts.root_tol);
        const Fn fq0 = [&](double r) { return q0(r, s0); };
        add("norm_q0", g,
            std::abs(oracle::integrate([&](double r) { return fq0(r) * fq0(r); }, 0.0, 1.0) +
                     oracle::integrate([&](double r) { return fq0(r) * fq0(r); }, 1.0, inf) - 1.0),
            opts.norm_tol);
        {
            const double jump = q0_derivative(1.0, s0, Side::outer) - q0_derivative(1.0, s0, Side::inner);
            const double expect = coupling.gamma() * q0(1.0, s0);
            add("jump_q0", g, rel(jump, expect), opts.jump_tol);
        }
        add("ode_q0", g, ode_residual(fq0, [](double) { return 0.0; }, s0.x, 0, false), opts.ode_tol);

        if (s1) {
            const BoundState p = *s1;
            add("root_residual_p", g, p.residual, opts.root_tol);
            const Fn fq1 = [&](double r) { return q1(r, p); };
            add("norm_q1", g,
                std::abs(oracle::integrate([&](double r) { return fq1(r) * fq1(r); }, 0.0, 1.0) +
                         oracle::integrate([&](double r) { return fq1(r) * fq1(r); }, 1.0, inf) -
                         1.0),
                opts.norm_tol);
            const double jump = q1_derivative(1.0, p, Side::outer) - q1_derivative(1.0, p, Side::inner);
            add("jump_q1", g, rel(jump, coupling.gamma() * q1(1.0, p)), opts.jump_tol);
            add("ode_q1", g, ode_residual(fq1, [](double) { return 0.0; }, p.x, 1, false),
                opts.ode_tol);
        }

        const Fn fs = [&](double r) { return s_profile(r, m); };
        {
            double smax = 0.0;
            const double cut = exterior_cutoff(s0.x);
            for (int i = 1; i <= 2000; ++i) smax = std::max(smax, std::abs(fs(cut * i / 2000.0)));
            const double in = s_branch(1.0, m, Side::inner);
            const double out = s_branch(1.0, m, Side::outer);
            add("continuity_s", g, std::abs(out - in) / smax, opts.continuity_tol);
            const double jump = s_derivative(1.0, m, Side::outer) - s_derivative(1.0, m, Side::inner);
            add("jump_s", g, rel(jump, coupling.gamma() * out), opts.jump_tol);
        }
        add("ode_s", g, ode_residual(fs, [&](double r) { return s_source(r, s0); }, s0.x, 1, true),
            opts.ode_tol);

        const double a_closed = alpha_closed_form(coupling, s0);
        const double a_bvp = oracle::alpha_bvp(coupling, s0).alpha;
        add("alpha_closed_vs_bvp", g, rel(a_closed, a_bvp), opts.alpha_tol);
        add("alpha_profile_vs_bvp", g, rel(oracle::alpha_from_quadrature(s0, fs), a_bvp),
            opts.alpha_tol);
        const RegionSplit split = alpha_regions(s0, m, opts.analysis.quad_tol);
        add("alpha_regions_sum", g, rel(split.alpha1 + split.alpha2, a_closed), opts.alpha_tol);
        add("alpha1_below_alpha2", g, split.alpha1 / split.alpha2, 1.0);

        if (s1) {
            const double ab = alpha_bound_bound(s0, *s1);
            const double ab_direct = oracle::alpha_bb_direct(s0, *s1);
            add("alpha_b_vs_direct", g, rel(ab, ab_direct), opts.alpha_b_tol);
            add("alpha_b_below_alpha", g, ab_direct / a_closed, 1.0);
        }
    }
    return rep;
}

void write_verify_table(std::ostream& os, const VerifyReport& report) {
    fmt::print(os, "{:<22} {:>8} {:>12} {:>10}  {}\n", "check", "|gamma|", "measured", "limit",
               "result");
    for (const auto& c : report.checks) {
        fmt::print(os, "{:<22} {:>8.4g} {:>12.3e} {:>10.1e}  {}\n", c.name, c.gamma_abs, c.measured,
                   c.tolerance, c.passed ? "PASS" : "FAIL");
    }
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const Check& c) { return !c.passed; });
    fmt::print(os, "{} checks, {} failed\n", report.checks.size(), failed);
}

void write_verify_json(std::ostream& os, const VerifyReport& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : report.checks) {
        arr.push_back({{"check", c.name},
                       {"gamma_abs", c.gamma_abs},
                       {"measured", c.measured},
                       {"limit", c.tolerance},
                       {"passed", c.passed}});
    }
    os << nlohmann::json{{"passed", report.all_passed()}, {"checks", arr}}.dump(2) << '\n';
}

}  // namespace shellpol::cli
