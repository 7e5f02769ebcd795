#include <doctest.h>

#include <cmath>

#include "shellpol/errors.hpp"
#include "shellpol/model.hpp"

using namespace shellpol;

TEST_CASE("coupling must be attractive") {
    CHECK_THROWS_AS(Coupling(0.0), RejectNonNegativeG);
    CHECK_THROWS_AS(Coupling(2.0), RejectNonNegativeG);
    CHECK_THROWS_AS(Coupling::from_abs(0.0), RejectNonNegativeG);
    const Coupling c(-2.5);
    CHECK(c.gamma() == -2.5);
    CHECK(c.abs() == 2.5);
    CHECK(Coupling::from_abs(4.0).gamma() == -4.0);
}

TEST_CASE("reduce and shell_strength are inverse") {
    const PhysicalParams p;
    const double g = -1.3e-38;
    const Coupling c = reduce(p, g);
    CHECK(c.gamma() == doctest::Approx(2.0 * p.mass * g / (p.hbar * p.hbar * p.r0)).epsilon(1e-15));
    CHECK(shell_strength(p, c) == doctest::Approx(g).epsilon(1e-14));
    CHECK_THROWS_AS(reduce(p, 1e-38), RejectNonNegativeG);
}

TEST_CASE("parameter validation") {
    PhysicalParams p;
    CHECK_NOTHROW(p.validate());
    p.r0 = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
    p = PhysicalParams{};
    p.mass = -1.0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
    p = PhysicalParams{};
    p.field = -1.0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
}

TEST_CASE("units") {
    PhysicalParams p;
    const double e = p.energy_unit();
    CHECK(e == doctest::Approx(p.hbar * p.hbar / (2.0 * p.mass * p.r0 * p.r0)).epsilon(1e-15));
    // ~ 0.42 eV for an electron at 3 Angstrom
    CHECK(e / constants::kElementaryCharge == doctest::Approx(0.42333).epsilon(1e-4));

    const double a3 = p.polarizability_unit();
    p.r0 *= 2.0;
    CHECK(p.polarizability_unit() / a3 == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("polarizability volume conversion") {
    const double si = 1.0e-40;
    CHECK(alpha_to_m3(si) == doctest::Approx(si * constants::kCoulombConstant).epsilon(1e-15));
    CHECK(alpha_to_m3(si, CoulombRounding::rounded_9e9) == doctest::Approx(si * 9e9).epsilon(1e-15));
}
