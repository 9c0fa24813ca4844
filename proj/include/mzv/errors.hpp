#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input: argument outside the operation's domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Mixed-sign exponent vectors: neither all positive nor all non-positive.
struct UnsupportedSignature : DomainError {
    explicit UnsupportedSignature(const std::string& msg) : DomainError(msg) {}
};

// Division by a zero rational or rational function.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Evaluation of a rational function whose denominator vanishes at the point.
struct PoleAtZero : Error {
    explicit PoleAtZero(const std::string& msg) : Error(msg) {}
};

// A series operation produced a window with lo > hi.
struct EmptyWindow : Error {
    explicit EmptyWindow(const std::string& msg) : Error(msg) {}
};

// Request for a series coefficient outside the claimed window.
struct OutOfWindow : Error {
    explicit OutOfWindow(const std::string& msg) : Error(msg) {}
};

// A numeric routine could not certify the requested tolerance within budget.
struct CertificationError : Error {
    explicit CertificationError(const std::string& msg) : Error(msg) {}
};

} // namespace mzv
