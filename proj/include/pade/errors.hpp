#pragma once

#include <stdexcept>
#include <string>

namespace pade {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid (ω, ρ) pair: duplicate exponents, integer differences, negative degrees.
class InstanceError : public Error {
public:
    using Error::Error;
};

/// Γ evaluated at (or too close to) a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A series was too short for the requested operation.
class TruncationError : public Error {
public:
    using Error::Error;
};

class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// Quadrature failed the node-doubling stability test.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

class PoleSeparationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the region where an integral representation applies.
class DomainError : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

/// Malformed input document; `field` names the offending entry.
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& what)
        : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace pade
