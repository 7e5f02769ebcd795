#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "shellpol/hyperbolic.hpp"

using namespace shellpol::hyp;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("scaled forms match direct evaluation at moderate arguments") {
    for (double u : {0.7, 1.3, 4.0, 11.0}) {
        for (double shift : {0.0, u, 2.0 * u}) {
            const double s = std::exp(-shift);
            CHECK(rel(sinh_scaled(u, shift), std::sinh(u) * s) < 1e-14);
            CHECK(rel(cosh_scaled(u, shift), std::cosh(u) * s) < 1e-14);
            CHECK(rel(sa_scaled(u, shift), (std::cosh(u) - std::sinh(u) / u) * s) < 1e-13);
            const double sap = std::sinh(u) - std::cosh(u) / u + std::sinh(u) / (u * u);
            CHECK(rel(sa_prime_scaled(u, shift), sap * s) < 1e-13);
            const double br = (-3.0 * u + 2.0 * u * u * u) * std::cosh(u) + 3.0 * std::sinh(u);
            CHECK(rel(inner_bracket_scaled(u, shift), br * s) < 1e-12);
        }
    }
}

TEST_CASE("series branches are continuous at the switch") {
    const double lo = std::nextafter(kSeriesSwitch, 0.0);
    const double hi = kSeriesSwitch;
    CHECK(rel(sa_scaled(lo, 0.0), sa_scaled(hi, 0.0)) < 1e-14);
    CHECK(rel(sa_prime_scaled(lo, 0.0), sa_prime_scaled(hi, 0.0)) < 1e-14);
    CHECK(rel(inner_bracket_scaled(lo, 0.0), inner_bracket_scaled(hi, 0.0)) < 1e-13);
    CHECK(rel(one_minus_1p2x_exp(lo), one_minus_1p2x_exp(hi)) < 1e-14);
    CHECK(rel(p_norm_denominator(lo), p_norm_denominator(hi)) < 1e-13);
}

TEST_CASE("small-argument leading behaviour") {
    const double u = 1e-4;
    CHECK(rel(sa_scaled(u, 0.0), u * u / 3.0) < 1e-7);
    CHECK(rel(sa_prime_scaled(u, 0.0), 2.0 * u / 3.0) < 1e-7);
    CHECK(rel(inner_bracket_scaled(u, 0.0), u * u * u) < 1e-7);
    CHECK(rel(one_minus_1p2x_exp(u), 2.0 * u * u) < 1e-3);
    CHECK(rel(p_norm_denominator(u), 8.0 * std::pow(u, 5) / 15.0) < 1e-3);
}

TEST_CASE("no overflow at large arguments") {
    const double u = 1500.0;
    CHECK(sinh_scaled(u, u) == doctest::Approx(0.5));
    CHECK(cosh_scaled(u, u) == doctest::Approx(0.5));
    CHECK(std::isfinite(sa_scaled(u, u)));
    CHECK(std::isfinite(inner_bracket_scaled(u, u) / (u * u * u)));
    CHECK(one_minus_1p2x_exp(u) == 1.0);
    CHECK(p_norm_denominator(u) == doctest::Approx(u * u - 3.0));
}
