#pragma once

#include <stdexcept>
#include <string>

namespace shellpol {

/// Base for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// g >= 0: a repulsive or null shell binds nothing.
class RejectNonNegativeG : public Error {
public:
    explicit RejectNonNegativeG(double g)
        : Error("shell strength g must be negative, got " + std::to_string(g)) {}
};

/// |gamma| <= 1: no s-wave bound state, hence no polarizability.
class NoBoundState : public Error {
public:
    explicit NoBoundState(double gamma_abs)
        : Error("no bound state for |gamma| = " + std::to_string(gamma_abs) +
                " (requires |gamma| > 1)") {}
};

/// |gamma| <= 3: no p-wave bound state.
class NoPState : public Error {
public:
    explicit NoPState(double gamma_abs)
        : Error("no p-state for |gamma| = " + std::to_string(gamma_abs) +
                " (requires |gamma| > 3)") {}
};

class NoSignChange : public Error {
public:
    NoSignChange(double lo, double hi)
        : Error("bisection bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                "] has no sign change") {}
};

class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(const std::string& what) : Error(what) {}
};

class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace shellpol
