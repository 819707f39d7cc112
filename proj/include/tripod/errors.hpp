#pragma once

#include <stdexcept>
#include <string>

namespace tripod {

// Root of the library's error hierarchy. CLI exit codes: ConfigError maps to
// 1, NoBracketError to 3, every other Error (physics/numerics) to 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters, malformed configuration, bad sweep specs.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A susceptibility denominator is on (or numerically at) a resonance pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// Group velocity came out non-positive or superluminal.
class DispersionError : public Error {
public:
    using Error::Error;
};

// The absorption scan has no half-maximum transparency dip.
class NoWindowError : public Error {
public:
    using Error::Error;
};

// The master-equation steady state is not unique.
class SingularSteadyStateError : public Error {
public:
    using Error::Error;
};

// The steady-state linear system is numerically untrustworthy.
class IllConditionedError : public Error {
public:
    using Error::Error;
};

// The weak-field susceptibility fit did not meet its residual threshold.
class FitError : public Error {
public:
    using Error::Error;
};

// A field intended to be perturbative is too strong for extraction.
class PerturbativityError : public Error {
public:
    using Error::Error;
};

// Root finding could not bracket the requested target.
class NoBracketError : public Error {
public:
    using Error::Error;
};

} // namespace tripod
