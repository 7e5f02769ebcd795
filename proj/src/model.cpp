#include "shellpol/model.hpp"

#include <cmath>
#include <string>

#include "shellpol/errors.hpp"

namespace shellpol {

void PhysicalParams::validate() const {
    if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
    if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
    if (!(r0 > 0.0)) throw InvalidArgument("shell radius r0 must be positive");
    if (!(field >= 0.0)) throw InvalidArgument("field magnitude must be non-negative");
}

double PhysicalParams::energy_unit() const {
    return hbar * hbar / (2.0 * mass * r0 * r0);
}

double PhysicalParams::polarizability_unit() const {
    // alpha [C^2 m^2 / J] = q^2 * length^2 / energy = q^2 r0^2 / (hbar^2 / 2 m r0^2)
    return charge * charge * r0 * r0 / energy_unit();
}

Coupling::Coupling(double gamma) : gamma_(gamma) {
    if (!(gamma < 0.0)) throw RejectNonNegativeG(gamma);
}

Coupling Coupling::from_abs(double gamma_abs) {
    return Coupling(-gamma_abs);
}

Coupling reduce(const PhysicalParams& params, double g) {
    params.validate();
    if (!(g < 0.0)) throw RejectNonNegativeG(g);
    return Coupling(2.0 * params.mass * g / (params.hbar * params.hbar * params.r0));
}

double shell_strength(const PhysicalParams& params, const Coupling& coupling) {
    return coupling.gamma() * params.hbar * params.hbar * params.r0 / (2.0 * params.mass);
}

double alpha_to_m3(double alpha_si, CoulombRounding rounding) {
    const double k = rounding == CoulombRounding::rounded_9e9 ? constants::kCoulombConstantRounded
                                                            : constants::kCoulombConstant;
    return alpha_si * k;
}

}  // namespace shellpol
