#pragma once

#include <optional>

namespace shellpol {

// Reduced units used throughout the engine:
//   length  r0                (rho = r / r0)
//   energy  hbar^2 / (2 m r0^2)
//   charge and field set to 1
// so a bound state with wavenumber k has x = k r0 and reduced energy -x^2.
// Physical constants only re-enter through the scale factors below.

namespace constants {
// CODATA 2018 electron values.
inline constexpr double kElectronMass = 9.1093837015e-31;    // kg
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kAngstrom = 1e-10;                    // m
// 1 / (4 pi eps0)
inline constexpr double kCoulombConstant = 8.9875517873681764e9;  // N m^2 C^-2
inline constexpr double kCoulombConstantRounded = 9e9;
}  // namespace constants

enum class CoulombRounding { exact, rounded_9e9 };

struct PhysicalParams {
    double mass = constants::kElectronMass;
    double charge = constants::kElementaryCharge;
    double hbar = constants::kHbar;
    double r0 = 3.0 * constants::kAngstrom;
    /// Only used to report an energy shift for a stated field; never enters alpha.
    double field = 1.0;

    /// Throws InvalidArgument unless mass, hbar, r0 are positive and field is non-negative.
    void validate() const;

    /// Energy unit hbar^2 / (2 m r0^2) in joules.
    [[nodiscard]] double energy_unit() const;

    /// Polarizability unit q^2 (2m/hbar^2) r0^4 in C^2 m^2 / J.
    [[nodiscard]] double polarizability_unit() const;
};

/// Dimensionless shell strength gamma = 2 m g / (hbar^2 r0). Always negative.
class Coupling {
public:
    /// Throws RejectNonNegativeG for gamma >= 0.
    explicit Coupling(double gamma);

    /// Coupling with the given |gamma|.
    static Coupling from_abs(double gamma_abs);

    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double abs() const noexcept { return -gamma_; }

private:
    double gamma_;
};

/// gamma = 2 m g / (hbar^2 r0); g in J m^2 (V(r) = g delta(r - r0) / r0^2).
Coupling reduce(const PhysicalParams& params, double g);

/// Inverse of reduce.
double shell_strength(const PhysicalParams& params, const Coupling& coupling);

/// Convert an SI polarizability (C^2 m^2 / J) to a polarizability volume (m^3).
double alpha_to_m3(double alpha_si, CoulombRounding rounding = CoulombRounding::exact);

struct PolarizabilityReport {
    double alpha_dimensionless = 0.0;
    double alpha_m3 = 0.0;
    double alpha1_m3 = 0.0;  // r < r0
    double alpha2_m3 = 0.0;  // r > r0
    std::optional<double> alpha_b_m3;  // absent when |gamma| <= 3
};

}  // namespace shellpol
