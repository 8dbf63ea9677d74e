#pragma once

#include <stdexcept>
#include <string>

namespace membrane {

/// Base class for all numerical and usage errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature hit its refinement cap before reaching tolerance.
/// The message carries the last two estimates so callers can judge how far off it was.
class NonconvergedIntegral : public Error {
public:
    NonconvergedIntegral(const std::string& what, double last, double previous)
        : Error(what + " (last estimate " + std::to_string(last) +
                ", previous " + std::to_string(previous) + ")"),
          last_estimate(last), previous_estimate(previous) {}
    double last_estimate;
    double previous_estimate;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

class PrevertexSingularity : public Error {
public:
    using Error::Error;
};

class NonintegrableExponent : public Error {
public:
    using Error::Error;
};

class ExponentOutOfRange : public Error {
public:
    using Error::Error;
};

class AlphaOutOfRange : public Error {
public:
    using Error::Error;
};

class UnboundedDerivative : public Error {
public:
    using Error::Error;
};

class NonconvergedDiameter : public Error {
public:
    using Error::Error;
};

class DerivativeZeroOnSamples : public Error {
public:
    using Error::Error;
};

class SolverNonconvergence : public Error {
public:
    using Error::Error;
};

class SingularMass : public Error {
public:
    using Error::Error;
};

class NoSpectralGap : public Error {
public:
    using Error::Error;
};

/// Raised when a domain specification file fails structural validation.
class SpecParseError : public Error {
public:
    using Error::Error;
};

} // namespace membrane
