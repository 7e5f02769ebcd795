#pragma once

// Overflow-safe hyperbolic building blocks.
//
// Every "scaled" function returns f(u) * exp(-shift); the exponentials are
// combined in exponent space, so with shift >= u nothing exceeds O(1) even for
// u in the thousands. Small arguments switch to power series where the direct
// forms cancel.

namespace shellpol::hyp {

/// Below this argument the cancellation-prone combinations use their series.
inline constexpr double kSeriesSwitch = 0.5;

/// sinh(u) * exp(-shift)
double sinh_scaled(double u, double shift);

/// cosh(u) * exp(-shift)
double cosh_scaled(double u, double shift);

/// (cosh u - sinh u / u) * exp(-shift); ~ u^2/3 for small u.
double sa_scaled(double u, double shift);

/// d/du (cosh u - sinh u / u) * exp(-shift); ~ 2u/3 for small u.
double sa_prime_scaled(double u, double shift);

/// [(-3u + 2u^3) cosh u + 3 sinh u] * exp(-shift); ~ u^3 for small u.
double inner_bracket_scaled(double u, double shift);

/// 1 - (1 + 2x) exp(-2x); ~ 2x^2 for small x.
double one_minus_1p2x_exp(double x);

/// x^2 - 3 + (2x^3 + 5x^2 + 6x + 3) exp(-2x); ~ 8x^5/15 for small x.
double p_norm_denominator(double x);

}  // namespace shellpol::hyp
