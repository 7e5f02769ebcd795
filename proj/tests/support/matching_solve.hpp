#pragma once

namespace shellpol::testing {

struct PlainCoefficients {
    double c = 0.0;
    double d = 0.0;
};

/// C and D from the continuity and jump conditions at rho = 1, solved as a
/// 2x2 linear system by Cramer's rule with plain cosh/sinh (no scaling).
/// Only meaningful for moderate x0.
PlainCoefficients solve_matching(double gamma, double x0);

}  // namespace shellpol::testing
