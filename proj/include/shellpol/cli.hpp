#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shellpol/model.hpp"
#include "shellpol/polarizability.hpp"
#include "shellpol/wavefunctions.hpp"

namespace shellpol::cli {

enum class Units { dimensionless, m3 };

struct OutputOptions {
    double r0_angstrom = 3.0;
    Units units = Units::m3;
    CoulombRounding rounding = CoulombRounding::exact;
    AnalysisOptions analysis{};
};

/// 17 significant digits; "nan" for NaN.
std::string format_number(double v);

/// Electron parameters with the requested shell radius.
PhysicalParams params_for(double r0_angstrom);

// ---- point ---------------------------------------------------------------

struct PointResult {
    double gamma_abs = 0.0;
    AlphaBreakdown breakdown;
    PolarizabilityReport report;
    double e0_joules = 0.0;
    std::optional<double> e1_joules;
};

/// Throws NoBoundState for gamma_abs <= 1.
PointResult run_point(double gamma_abs, const OutputOptions& opts);
void write_point_text(std::ostream& os, const PointResult& r, const OutputOptions& opts);

// ---- sweep ---------------------------------------------------------------

struct SweepSpec {
    double gamma_abs_start = 1.1;
    double gamma_abs_end = 20.0;
    int steps = 100;

    /// Throws InvalidArgument unless 1 < start < end and steps >= 2.
    void validate() const;
    [[nodiscard]] std::vector<double> grid() const;
};

struct SweepRow {
    double gamma_abs = 0.0;
    double x0 = 0.0;
    double x1 = 0.0;  // NaN when absent
    double alpha = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha_b = 0.0;  // NaN when absent
};

inline constexpr const char* kSweepHeader = "gamma_abs,x0,x1,alpha,alpha1,alpha2,alpha_b";

/// Worker count from SHELLPOL_THREADS (defaults to hardware concurrency).
unsigned thread_count();

/// Rows in grid order. Any failing row aborts the sweep with its exception.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const OutputOptions& opts,
                                unsigned threads = thread_count());
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// ---- profile -------------------------------------------------------------

struct ProfileSpec {
    std::vector<double> gamma_abs{2.0};
    ProfileKind which = ProfileKind::q0;
    int n_points = 400;
    double rho_max = 4.0;

    void validate() const;
};

struct ProfileCurve {
    double gamma_abs = 0.0;
    RadialProfile profile;
};

/// Samples rho = i * rho_max / n_points, i = 1..n_points, for every gamma.
std::vector<ProfileCurve> run_profile(const ProfileSpec& spec);

/// `rho,value` for one gamma, `gamma_abs,rho,value` for several.
void write_profile_csv(std::ostream& os, const std::vector<ProfileCurve>& curves);

// ---- verify --------------------------------------------------------------

struct VerifyOptions {
    std::vector<double> gamma_abs{1.2, 1.5, 2.0, 3.0, 4.0, 5.0, 8.0, 12.0, 20.0};
    /// Relative perturbation applied to C and D before the checks (fault injection).
    double perturb_coeff = 0.0;
    double root_tol = 1e-12;
    double norm_tol = 1e-8;
    double continuity_tol = 1e-10;
    double jump_tol = 1e-8;
    double ode_tol = 1e-6;
    double alpha_tol = 1e-6;
    double alpha_b_tol = 1e-4;
    AnalysisOptions analysis{};
};

struct Check {
    std::string name;
    double gamma_abs = 0.0;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<Check> checks;
    [[nodiscard]] bool all_passed() const;
};

VerifyReport run_verify(const VerifyOptions& opts);
void write_verify_table(std::ostream& os, const VerifyReport& report);
void write_verify_json(std::ostream& os, const VerifyReport& report);

// ---- svg -----------------------------------------------------------------

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;  // NaN points are skipped
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
};

void write_svg(std::ostream& os, const PlotSpec& plot, const std::vector<Series>& series);

}  // namespace shellpol::cli
