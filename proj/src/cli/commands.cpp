#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <limits>
#include <ostream>
#include <thread>

#include "shellpol/cli.hpp"
#include "shellpol/errors.hpp"

namespace shellpol::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double in_units(double alpha_reduced, const PhysicalParams& params, const OutputOptions& opts) {
    if (opts.units == Units::dimensionless) return alpha_reduced;
    return alpha_to_m3(alpha_reduced * params.polarizability_unit(), opts.rounding);
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    return fmt::format("{:.17g}", v);
}

PhysicalParams params_for(double r0_angstrom) {
    PhysicalParams p;
    p.r0 = r0_angstrom * constants::kAngstrom;
    p.validate();
    return p;
}

PointResult run_point(double gamma_abs, const OutputOptions& opts) {
    if (!(gamma_abs > 0.0)) throw InvalidArgument("--gamma must be positive (it is |gamma|)");
    const PhysicalParams params = params_for(opts.r0_angstrom);
    PointResult r;
    r.gamma_abs = gamma_abs;
    r.breakdown = analyze(Coupling::from_abs(gamma_abs), opts.analysis);
    r.report = make_report(params, r.breakdown, opts.rounding);
    r.e0_joules = r.breakdown.s0.energy_joules(params);
    if (r.breakdown.s1) r.e1_joules = r.breakdown.s1->energy_joules(params);
    return r;
}

void write_point_text(std::ostream& os, const PointResult& r, const OutputOptions& opts) {
    const PhysicalParams params = params_for(opts.r0_angstrom);
    const auto& b = r.breakdown;
    const auto alpha = [&](double a) { return format_number(in_units(a, params, opts)); };
    const std::string unit = opts.units == Units::m3 ? "m^3" : "reduced";
    fmt::print(os, "|gamma|   {}\n", format_number(r.gamma_abs));
    fmt::print(os, "r0        {} Angstrom\n", format_number(opts.r0_angstrom));
    fmt::print(os, "x0        {}\n", format_number(b.s0.x));
    fmt::print(os, "x1        {}\n", b.s1 ? format_number(b.s1->x) : "absent");
    fmt::print(os, "E0        {} J\n", format_number(r.e0_joules));
    fmt::print(os, "E1        {}\n", r.e1_joules ? format_number(*r.e1_joules) + " J" : "absent");
    fmt::print(os, "alpha     {} {}\n", alpha(b.alpha_closed), unit);
    fmt::print(os, "alpha1    {} {}\n", alpha(b.alpha1), unit);
    fmt::print(os, "alpha2    {} {}\n", alpha(b.alpha2), unit);
    fmt::print(os, "alpha_b   {}\n", b.alpha_b ? alpha(*b.alpha_b) + " " + unit : "absent");
}

void SweepSpec::validate() const {
    if (!(gamma_abs_start > 1.0)) throw InvalidArgument("--gamma-start must exceed 1");
    if (!(gamma_abs_end > gamma_abs_start)) {
        throw InvalidArgument("--gamma-end must exceed --gamma-start");
    }
    if (steps < 2) throw InvalidArgument("--steps must be at least 2");
}

std::vector<double> SweepSpec::grid() const {
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i) {
        g[i] = gamma_abs_start + (gamma_abs_end - gamma_abs_start) * i / (steps - 1);
    }
    g.back() = gamma_abs_end;
    return g;
}

unsigned thread_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SHELLPOL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const OutputOptions& opts,
                                unsigned threads) {
    spec.validate();
    const PhysicalParams params = params_for(opts.r0_angstrom);
    const std::vector<double> grid = spec.grid();
    std::vector<SweepRow> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                const AlphaBreakdown b = analyze(Coupling::from_abs(grid[i]), opts.analysis);
                SweepRow& r = rows[i];
                r.gamma_abs = grid[i];
                r.x0 = b.s0.x;
                r.x1 = b.s1 ? b.s1->x : kNaN;
                r.alpha = in_units(b.alpha_closed, params, opts);
                r.alpha1 = in_units(b.alpha1, params, opts);
                r.alpha2 = in_units(b.alpha2, params, opts);
                r.alpha_b = b.alpha_b ? in_units(*b.alpha_b, params, opts) : kNaN;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = std::max(1u, std::min<unsigned>(threads, grid.size()));
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepHeader << '\n';
    for (const auto& r : rows) {
        fmt::print(os, "{},{},{},{},{},{},{}\n", format_number(r.gamma_abs), format_number(r.x0),
                   format_number(r.x1), format_number(r.alpha), format_number(r.alpha1),
                   format_number(r.alpha2), format_number(r.alpha_b));
    }
}

void ProfileSpec::validate() const {
    if (gamma_abs.empty()) throw InvalidArgument("at least one --gamma is required");
    for (double g : gamma_abs) {
        if (!(g > 0.0)) throw InvalidArgument("--gamma must be positive (it is |gamma|)");
    }
    if (n_points < 2) throw InvalidArgument("--points must be at least 2");
    if (!(rho_max > 0.0)) throw InvalidArgument("--rho-max must be positive");
}

std::vector<ProfileCurve> run_profile(const ProfileSpec& spec) {
    spec.validate();
    std::vector<double> rhos(spec.n_points);
    for (int i = 0; i < spec.n_points; ++i) rhos[i] = spec.rho_max * (i + 1) / spec.n_points;
    std::vector<ProfileCurve> curves;
    curves.reserve(spec.gamma_abs.size());
    for (double g : spec.gamma_abs) {
        curves.push_back({g, sample_profile(spec.which, Coupling::from_abs(g), rhos)});
    }
    return curves;
}

void write_profile_csv(std::ostream& os, const std::vector<ProfileCurve>& curves) {
    const bool multi = curves.size() > 1;
    os << (multi ? "gamma_abs,rho,value\n" : "rho,value\n");
    for (const auto& c : curves) {
        for (const auto& s : c.profile.samples) {
            if (multi) os << format_number(c.gamma_abs) << ',';
            os << format_number(s.rho) << ',' << format_number(s.value) << '\n';
        }
    }
}

}  // namespace shellpol::cli
