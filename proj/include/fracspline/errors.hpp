#pragma once

#include <stdexcept>
#include <string>

namespace fracspline {

// Base class for every numerical-domain failure raised by this library.
// Programming errors (bad sizes etc.) use the std exceptions directly.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

class PoleError : public NumericsError {
public:
    explicit PoleError(const std::string& msg) : NumericsError(msg) {}
};

// x = 0 with a non-integrable pointwise exponent.
class SingularAtZero : public NumericsError {
public:
    explicit SingularAtZero(const std::string& msg) : NumericsError(msg) {}
};

class NonIntegrable : public NumericsError {
public:
    explicit NonIntegrable(const std::string& msg) : NumericsError(msg) {}
};

class NoConvergence : public NumericsError {
public:
    explicit NoConvergence(const std::string& msg) : NumericsError(msg) {}
};

class TailNotNegligible : public NumericsError {
public:
    explicit TailNotNegligible(const std::string& msg) : NumericsError(msg) {}
};

class MissingDerivative : public NumericsError {
public:
    explicit MissingDerivative(const std::string& msg) : NumericsError(msg) {}
};

// Alternating series failed to meet its stopping rule.
class NoDecay : public NumericsError {
public:
    explicit NoDecay(const std::string& msg) : NumericsError(msg) {}
};

class DimensionTooHigh : public NumericsError {
public:
    explicit DimensionTooHigh(const std::string& msg) : NumericsError(msg) {}
};

class NegativeA : public NumericsError {
public:
    explicit NegativeA(const std::string& msg) : NumericsError(msg) {}
};

class LogSingularity : public NumericsError {
public:
    explicit LogSingularity(const std::string& msg) : NumericsError(msg) {}
};

class LatticePointSingularity : public NumericsError {
public:
    explicit LatticePointSingularity(const std::string& msg) : NumericsError(msg) {}
};

// Constructor preconditions (order regimes, grid shapes, weight modes).
class DomainError : public NumericsError {
public:
    explicit DomainError(const std::string& msg) : NumericsError(msg) {}
};

} // namespace fracspline
