#pragma once

#include <stdexcept>
#include <string>

namespace l2torsion {

// Base class for all precondition violations raised by this library.
// Verification *failures* are never thrown; they travel in VerificationReport.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// d is not an odd integer >= 3 (or exceeds a command's documented range).
class InvalidDimension : public Error {
public:
    explicit InvalidDimension(const std::string& what) : Error(what) {}
};

// Degree index j outside [0, n], or an n < 1 where n >= 1 is required.
class InvalidDegree : public Error {
public:
    explicit InvalidDegree(const std::string& what) : Error(what) {}
};

// Shift parameter a = n - j outside [1, n] where a positive shift is required.
class InvalidShift : public Error {
public:
    explicit InvalidShift(const std::string& what) : Error(what) {}
};

// Volume argument is negative, NaN, or infinite.
class InvalidVolume : public Error {
public:
    explicit InvalidVolume(const std::string& what) : Error(what) {}
};

// Evaluation time t <= 0 passed to a heat-trace routine.
class NonPositiveTime : public Error {
public:
    explicit NonPositiveTime(const std::string& what) : Error(what) {}
};

// Polynomial division requested where the divisor does not divide exactly.
class NonZeroRemainder : public Error {
public:
    explicit NonZeroRemainder(const std::string& what) : Error(what) {}
};

} // namespace l2torsion
