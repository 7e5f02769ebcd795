// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 when exactly the criteria named by --expect-fail fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fmt/format.h>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matching_solve.hpp"
#include "shellpol/cli.hpp"
#include "shellpol/errors.hpp"
#include "shellpol/oracle.hpp"
#include "shellpol/polarizability.hpp"

using namespace shellpol;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void require(bool ok, std::string note) {
        if (!ok) passed = false;
        notes.push_back((ok ? "" : "!") + std::move(note));
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

double norm_error(const std::function<double(double)>& f) {
    const auto sq = [&](double r) { return f(r) * f(r); };
    return std::abs(oracle::integrate(sq, 0.0, 1.0) + oracle::integrate(sq, 1.0, kInf) - 1.0);
}

// Width between the 25% and 75% points of the distribution f^2 on the samples.
double iqr_width(const RadialProfile& p) {
    std::vector<double> cum(p.samples.size(), 0.0);
    for (std::size_t i = 1; i < p.samples.size(); ++i) {
        const double h = p.samples[i].rho - p.samples[i - 1].rho;
        const double a = p.samples[i - 1].value, b = p.samples[i].value;
        cum[i] = cum[i - 1] + 0.5 * h * (a * a + b * b);
    }
    const auto quantile = [&](double q) {
        const double target = q * cum.back();
        const auto it = std::lower_bound(cum.begin(), cum.end(), target);
        const std::size_t i = std::max<std::size_t>(1, it - cum.begin());
        const double t = (target - cum[i - 1]) / (cum[i] - cum[i - 1]);
        return p.samples[i - 1].rho + t * (p.samples[i].rho - p.samples[i - 1].rho);
    };
    return quantile(0.75) - quantile(0.25);
}

const std::vector<double> kGateGrid{1.2, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0};

Outcome spectrum_roots() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const BoundState s = ground_state(Coupling::from_abs(2.0));
    // mpmath, 30 digits
    const double ref = 0.79681213002002005;
    o.require(std::abs(s.x - ref) < 1e-10, fmt::format("x0(2) err {:.1e}", std::abs(s.x - ref)));
    o.require(s.residual < 1e-12, fmt::format("residual {:.1e}", s.residual));
    o.require(throws<NoBoundState>([] { ground_state(Coupling::from_abs(1.0)); }),
              "NoBoundState at 1");
    o.require(throws<NoPState>([] { p_state(Coupling::from_abs(3.0)); }), "NoPState at 3");
    const BoundState a = ground_state(Coupling::from_abs(1.0 + 1e-4));
    const BoundState b = p_state(Coupling::from_abs(3.0 + 1e-4));
    o.require(a.x > 0.0 && b.x > 0.0, "both exist at +1e-4");
    const double dt = seconds_since(t0);
    o.require(dt < 1.0, fmt::format("{:.3f} s", dt));
    return o;
}

Outcome normalization() {
    Outcome o;
    double worst = 0.0;
    for (double g : {2.0, 5.0, 12.0}) {
        const auto [s0, s1] = state_pair(Coupling::from_abs(g));
        worst = std::max(worst, norm_error([&](double r) { return q0(r, s0); }));
        if (s1) worst = std::max(worst, norm_error([&](double r) { return q1(r, *s1); }));
    }
    o.require(worst <= 1e-8, fmt::format("max |norm - 1| {:.1e}", worst));
    return o;
}

Outcome matching() {
    Outcome o;
    double cont = 0.0, jump = 0.0, coeff = 0.0;
    for (double g : {1.5, 2.0, 5.0, 12.0}) {
        const Coupling c = Coupling::from_abs(g);
        const BoundState s0 = ground_state(c);
        const MatchingCoefficients m = matching_coefficients(c, s0);
        const double in = s_branch(1.0, m, Side::inner), out = s_branch(1.0, m, Side::outer);
        cont = std::max(cont, rel(in, out));
        const double dj = s_derivative(1.0, m, Side::outer) - s_derivative(1.0, m, Side::inner);
        jump = std::max(jump, rel(dj, c.gamma() * out));
        const auto plain = testing::solve_matching(c.gamma(), s0.x);
        coeff = std::max({coeff, rel(m.c(), plain.c), rel(m.d(), plain.d)});
    }
    o.require(cont < 1e-10, fmt::format("continuity {:.1e}", cont));
    o.require(jump < 1e-8, fmt::format("jump {:.1e}", jump));
    o.require(coeff < 1e-10, fmt::format("C,D vs 2x2 solve {:.1e}", coeff));
    return o;
}

Outcome ode_residuals() {
    Outcome o;
    double worst = 0.0;
    for (double g : kGateGrid) {
        const Coupling c = Coupling::from_abs(g);
        const BoundState s0 = ground_state(c);
        const MatchingCoefficients m = matching_coefficients(c, s0);
        const double x = s0.x;
        const double h = 1e-2 / std::max(1.0, x);
        std::vector<double> pts;
        for (int i = 0; i < 10; ++i) pts.push_back(0.05 + 0.9 * i / 9.0);
        for (int i = 0; i < 10; ++i) pts.push_back(1.05 + 4.0 / std::max(1.0, x) * i / 9.0);
        double res = 0.0, scale = 0.0;
        for (double r : pts) {
            const double f = s_profile(r, m);
            const double d2 = (-s_profile(r + 2.0 * h, m) + 16.0 * s_profile(r + h, m) - 30.0 * f +
                               16.0 * s_profile(r - h, m) - s_profile(r - 2.0 * h, m)) /
                              (12.0 * h * h);
            res = std::max(res, std::abs(d2 - (x * x + 2.0 / (r * r)) * f - s_source(r, s0)));
            scale = std::max(scale, std::abs(s_source(r, s0)));
        }
        worst = std::max(worst, res / scale);
    }
    o.require(worst < 1e-6, fmt::format("max scaled residual {:.1e}", worst));
    return o;
}

Outcome central_gate() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0, at = 0.0;
    for (double g : kGateGrid) {
        const Coupling c = Coupling::from_abs(g);
        const BoundState s0 = ground_state(c);
        const double e = rel(alpha_closed_form(c, s0), oracle::alpha_bvp(c, s0).alpha);
        if (e > worst) {
            worst = e;
            at = g;
        }
    }
    const double dt = seconds_since(t0);
    o.require(worst <= 1e-6, fmt::format("max rel diff {:.1e} at |gamma| = {}", worst, at));
    o.require(dt < 30.0, fmt::format("{:.2f} s", dt));
    return o;
}

Outcome decomposition() {
    Outcome o;
    double worst = 0.0;
    bool ordered = true;
    double r15 = 0.0, r12 = 0.0;
    for (double g : kGateGrid) {
        const Coupling c = Coupling::from_abs(g);
        const BoundState s0 = ground_state(c);
        const RegionSplit s = alpha_regions(s0, matching_coefficients(c, s0));
        worst = std::max(worst, rel(s.alpha1 + s.alpha2, alpha_closed_form(c, s0)));
        ordered = ordered && s.alpha2 > s.alpha1;
        if (g == 1.5) r15 = s.alpha1 / s.alpha2;
        if (g == 12.0) r12 = s.alpha1 / s.alpha2;
    }
    o.require(worst < 1e-6, fmt::format("sum {:.1e}", worst));
    o.require(ordered, "alpha2 > alpha1 everywhere");
    o.require(r12 > r15, fmt::format("alpha1/alpha2 {:.4f} -> {:.4f}", r15, r12));
    return o;
}

Outcome bound_to_bound() {
    Outcome o;
    double worst = 0.0;
    bool bounded = true;
    double first = 0.0, last = 0.0;
    for (double g : {4.0, 5.0, 8.0, 12.0}) {
        const Coupling c = Coupling::from_abs(g);
        const auto [s0, s1] = state_pair(c);
        const double closed = alpha_bound_bound(s0, *s1);
        const double direct = oracle::alpha_bb_direct(s0, *s1);
        const double alpha = alpha_closed_form(c, s0);
        worst = std::max(worst, rel(closed, direct));
        bounded = bounded && direct > 0.0 && direct < alpha;
        if (g == 4.0) first = direct / alpha;
        if (g == 12.0) last = direct / alpha;
    }
    o.require(worst < 1e-4, fmt::format("closed vs direct {:.1e}", worst));
    o.require(bounded, "0 < alpha_b < alpha");
    o.require(last > first, fmt::format("alpha_b/alpha {:.5f} -> {:.5f}", first, last));
    return o;
}

Outcome shape() {
    Outcome o;
    cli::OutputOptions opts;
    const auto rows = cli::run_sweep(cli::SweepSpec{1.1, 20.0, 100}, opts);
    std::size_t bad = 0, first_bad = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].alpha < rows[i - 1].alpha)) {
            if (bad++ == 0) first_bad = i;
        }
    }
    const auto min_it = std::min_element(rows.begin(), rows.end(),
                                         [](const auto& a, const auto& b) { return a.alpha < b.alpha; });
    o.require(bad == 0, bad == 0 ? "alpha strictly decreasing"
                                 : fmt::format("alpha rises at {} of 99 steps from |gamma| = {:.3f}; "
                                               "minimum at |gamma| = {:.3f}",
                                               bad, rows[first_bad].gamma_abs, min_it->gamma_abs));

    for (ProfileKind kind : {ProfileKind::q0, ProfileKind::s}) {
        cli::ProfileSpec spec;
        spec.gamma_abs = {2.0, 5.0, 12.0};
        spec.which = kind;
        spec.rho_max = exterior_cutoff(ground_state(Coupling::from_abs(2.0)).x);
        spec.n_points = 40000;
        const auto curves = cli::run_profile(spec);
        std::vector<double> w;
        for (const auto& c : curves) w.push_back(iqr_width(c.profile));
        o.require(w[0] > w[1] && w[1] > w[2],
                  fmt::format("{} IQR {:.4f} {:.4f} {:.4f}", to_string(kind), w[0], w[1], w[2]));
    }
    return o;
}

Outcome robustness() {
    Outcome o;
    const Coupling c = Coupling::from_abs(1000.0);
    const AlphaBreakdown b = analyze(c);
    const MatchingCoefficients m = matching_coefficients(c, b.s0);
    std::vector<double> v{b.s0.x, b.s1->x, b.alpha_closed, b.alpha_quad, b.alpha1, b.alpha2,
                          *b.alpha_b, m.c_scaled, m.d_scaled};
    for (double r : {0.01, 0.5, 0.999, 1.0, 1.001, 1.02}) {
        v.push_back(q0(r, b.s0));
        v.push_back(q1(r, *b.s1));
        v.push_back(s_profile(r, m));
        v.push_back(s_derivative(r, m, side_of(r)));
    }
    const bool finite = std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
    o.require(finite, fmt::format("x0 = {:.6f}, alpha = {:.12f}", b.s0.x, b.alpha_closed));
    return o;
}

Outcome determinism() {
    Outcome o;
    cli::OutputOptions opts;
    const cli::SweepSpec spec{1.1, 20.0, 100};
    std::ostringstream a, b, c;
    cli::write_sweep_csv(a, cli::run_sweep(spec, opts));
    cli::write_sweep_csv(b, cli::run_sweep(spec, opts));
    cli::write_sweep_csv(c, cli::run_sweep(spec, opts, 1));
    o.require(a.str() == b.str() && a.str() == c.str(),
              fmt::format("{} bytes, identical across runs and thread counts", a.str().size()));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_fail;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            expected_fail.insert(std::atoi(argv[++i]));
        } else {
            fmt::print(stderr, "usage: acceptance [--expect-fail N]...\n");
            return 64;
        }
    }

    const std::vector<std::function<Outcome()>> criteria{
        spectrum_roots, normalization, matching,   ode_residuals, central_gate,
        decomposition,  bound_to_bound, shape, robustness,  determinism};

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.passed = false;
            o.notes.push_back(std::string("!exception: ") + e.what());
        }
        std::string detail;
        for (const auto& n : o.notes) detail += (detail.empty() ? "" : "; ") + n;
        const bool xfail = expected_fail.count(id) > 0;
        fmt::print("criterion {:>2}: {}  {}{}\n", id, o.passed ? "PASS" : "FAIL", detail,
                   xfail ? "  [known failure]" : "");
        if (o.passed == xfail) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
