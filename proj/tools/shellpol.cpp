#include <CLI11.hpp>
#include <limits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "shellpol/cli.hpp"
#include "shellpol/errors.hpp"

namespace fs = std::filesystem;
using namespace shellpol;
using namespace shellpol::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNoBoundState = 2;
constexpr int kExitUsage = 64;

// Writes the whole buffer next to the target and renames it into place, so a
// failed run never leaves a truncated file behind.
void write_file(const std::string& path, const std::string& content) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw InvalidArgument("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw Error("write to " + tmp.string() + " failed");
        }
    }
    fs::rename(tmp, target);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_file(path, content);
    }
}

std::string point_json(const PointResult& r, const OutputOptions& opts) {
    const auto& b = r.breakdown;
    const auto absent = [](const std::optional<double>& v) -> nlohmann::json {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    nlohmann::json j{{"gamma_abs", r.gamma_abs},
                     {"r0_angstrom", opts.r0_angstrom},
                     {"x0", b.s0.x},
                     {"x1", b.s1 ? nlohmann::json(b.s1->x) : nlohmann::json(nullptr)},
                     {"e0_joules", r.e0_joules},
                     {"e1_joules", absent(r.e1_joules)},
                     {"alpha_reduced", b.alpha_closed},
                     {"alpha1_reduced", b.alpha1},
                     {"alpha2_reduced", b.alpha2},
                     {"alpha_b_reduced", absent(b.alpha_b)},
                     {"alpha_m3", r.report.alpha_m3},
                     {"alpha1_m3", r.report.alpha1_m3},
                     {"alpha2_m3", r.report.alpha2_m3},
                     {"alpha_b_m3", absent(r.report.alpha_b_m3)}};
    return j.dump(2) + "\n";
}

std::string point_csv(const PointResult& r, const OutputOptions& opts) {
    SweepRow row;
    const auto& b = r.breakdown;
    const bool m3 = opts.units == Units::m3;
    row.gamma_abs = r.gamma_abs;
    row.x0 = b.s0.x;
    row.x1 = b.s1 ? b.s1->x : std::numeric_limits<double>::quiet_NaN();
    row.alpha = m3 ? r.report.alpha_m3 : b.alpha_closed;
    row.alpha1 = m3 ? r.report.alpha1_m3 : b.alpha1;
    row.alpha2 = m3 ? r.report.alpha2_m3 : b.alpha2;
    const std::optional<double> ab = m3 ? r.report.alpha_b_m3 : b.alpha_b;
    row.alpha_b = ab ? *ab : std::numeric_limits<double>::quiet_NaN();
    std::ostringstream os;
    write_sweep_csv(os, {row});
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polarizability of a particle bound by an attractive delta-shell potential."};
    app.require_subcommand(1);
    app.footer(
        "Coupling is given as |gamma| (gamma = 2 m g / (hbar^2 r0) < 0).\n"
        "CSV output uses 17 significant digits; absent values (no p-state for\n"
        "|gamma| <= 3) are written as the lowercase sentinel `nan`.\n"
        "SHELLPOL_THREADS caps the number of sweep workers.\n"
        "Exit codes: 0 ok, 1 verification or computation failure, 2 no bound state,\n"
        "64 usage error.");

    OutputOptions out_opts;
    std::string units = "m3";
    bool rounded_coulomb = false;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--r0", out_opts.r0_angstrom, "Shell radius in Angstrom")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--units", units, "Polarizability units")
            ->check(CLI::IsMember({"dimensionless", "m3"}))
            ->capture_default_str();
        sub->add_flag("--paper-rounding", rounded_coulomb,
                      "Use 1/(4 pi eps0) = 9e9 instead of the exact value");
        sub->add_option("--tol-root", out_opts.analysis.root_tol, "Bisection bracket width")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--tol-quad", out_opts.analysis.quad_tol, "Quadrature relative tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    // point
    auto* point = app.add_subcommand("point", "Spectrum and polarizability at one |gamma|");
    double point_gamma = 0.0;
    std::string point_out;
    bool point_json_flag = false;
    point->add_option("--gamma", point_gamma, "|gamma|")->required();
    point->add_option("--out", point_out, "Also write a one-row CSV to this path");
    point->add_flag("--json", point_json_flag, "Print JSON instead of text");
    add_common(point);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Polarizability over a uniform |gamma| grid (CSV)");
    SweepSpec sweep_spec;
    std::string sweep_out, sweep_svg;
    bool log_y = false;
    sweep->add_option("--gamma-start", sweep_spec.gamma_abs_start, "First |gamma| (> 1)")
        ->capture_default_str();
    sweep->add_option("--gamma-end", sweep_spec.gamma_abs_end, "Last |gamma|")->capture_default_str();
    sweep->add_option("--steps", sweep_spec.steps, "Number of grid points (>= 2)")
        ->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV path (stdout if omitted)");
    sweep->add_option("--svg", sweep_svg, "Also plot alpha, alpha1, alpha2, alpha_b to this SVG");
    sweep->add_flag("--log-y", log_y, "Logarithmic vertical axis in the SVG");
    add_common(sweep);

    // profile
    auto* profile = app.add_subcommand("profile", "Radial profile Q0, Q1 or S on a rho grid (CSV)");
    ProfileSpec profile_spec;
    profile_spec.gamma_abs.clear();
    std::string which = "q0", profile_out, profile_svg;
    profile->add_option("--gamma", profile_spec.gamma_abs, "|gamma|; repeat for several curves")
        ->required();
    profile->add_option("--which", which, "Function to sample")
        ->check(CLI::IsMember({"q0", "q1", "S", "sa", "sb"}))
        ->capture_default_str();
    profile->add_option("--points", profile_spec.n_points, "Samples per curve")->capture_default_str();
    profile->add_option("--rho-max", profile_spec.rho_max, "Largest rho = r / r0")
        ->capture_default_str();
    profile->add_option("--out", profile_out, "CSV path (stdout if omitted)");
    profile->add_option("--svg", profile_svg, "Also plot the curves to this SVG");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the invariant suite against the oracles");
    VerifyOptions verify_opts;
    std::vector<double> verify_gammas;
    bool verify_json = false;
    verify->add_option("--gamma", verify_gammas, "|gamma| values (default grid if omitted)");
    verify->add_option("--perturb-coeff", verify_opts.perturb_coeff,
                       "Scale C and D by (1 + value) before checking");
    verify->add_option("--tol-root", verify_opts.analysis.root_tol, "Bisection bracket width")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol-quad", verify_opts.analysis.quad_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", verify_json, "Print a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    out_opts.units = units == "m3" ? Units::m3 : Units::dimensionless;
    out_opts.rounding = rounded_coulomb ? CoulombRounding::rounded_9e9 : CoulombRounding::exact;

    try {
        if (point->parsed()) {
            const PointResult r = run_point(point_gamma, out_opts);
            if (point_json_flag) {
                std::cout << point_json(r, out_opts);
            } else {
                write_point_text(std::cout, r, out_opts);
            }
            if (!point_out.empty()) write_file(point_out, point_csv(r, out_opts));
        } else if (sweep->parsed()) {
            const std::vector<SweepRow> rows = run_sweep(sweep_spec, out_opts);
            std::ostringstream csv;
            write_sweep_csv(csv, rows);
            std::string svg;
            if (!sweep_svg.empty()) {
                std::map<std::string, Series> s;
                for (const char* name : {"alpha", "alpha1", "alpha2", "alpha_b"}) s[name].label = name;
                for (const auto& r : rows) {
                    for (auto& [name, series] : s) series.x.push_back(r.gamma_abs);
                    s["alpha"].y.push_back(r.alpha);
                    s["alpha1"].y.push_back(r.alpha1);
                    s["alpha2"].y.push_back(r.alpha2);
                    s["alpha_b"].y.push_back(r.alpha_b);
                }
                std::ostringstream os;
                write_svg(os,
                          {"Electric polarizability", "|gamma|",
                           out_opts.units == Units::m3 ? "alpha (m^3)" : "alpha (reduced)", log_y},
                          {s["alpha"], s["alpha1"], s["alpha2"], s["alpha_b"]});
                svg = os.str();
            }
            emit(sweep_out, csv.str());
            if (!svg.empty()) write_file(sweep_svg, svg);
        } else if (profile->parsed()) {
            profile_spec.which = which == "q0"   ? ProfileKind::q0
                                 : which == "q1" ? ProfileKind::q1
                                 : which == "S"  ? ProfileKind::s
                                 : which == "sa" ? ProfileKind::sa
                                                 : ProfileKind::sb;
            const std::vector<ProfileCurve> curves = run_profile(profile_spec);
            std::ostringstream csv;
            write_profile_csv(csv, curves);
            std::string svg;
            if (!profile_svg.empty()) {
                std::vector<Series> series;
                for (const auto& c : curves) {
                    Series s;
                    s.label = "|gamma| = " + format_number(c.gamma_abs);
                    for (const auto& p : c.profile.samples) {
                        s.x.push_back(p.rho);
                        s.y.push_back(p.value);
                    }
                    series.push_back(std::move(s));
                }
                std::ostringstream os;
                write_svg(os, {std::string(to_string(profile_spec.which)) + "(rho)", "rho = r / r0",
                               which, false},
                          series);
                svg = os.str();
            }
            emit(profile_out, csv.str());
            if (!svg.empty()) write_file(profile_svg, svg);
        } else if (verify->parsed()) {
            if (!verify_gammas.empty()) verify_opts.gamma_abs = verify_gammas;
            const VerifyReport report = run_verify(verify_opts);
            if (verify_json) {
                write_verify_json(std::cout, report);
            } else {
                write_verify_table(std::cout, report);
            }
            return report.all_passed() ? kExitOk : kExitFailure;
        }
    } catch (const NoBoundState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoBoundState;
    } catch (const NoPState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoBoundState;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RejectNonNegativeG& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
