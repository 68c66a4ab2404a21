#pragma once

#include <stdexcept>
#include <string>

namespace eves {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (zero input, weight mismatch, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A map was evaluated outside the set where it is well-defined.
class UndefinedPoint : public Error {
public:
    using Error::Error;
};

/// The configuration is not an h-configuration for the requested weight.
class NotHConfiguration : public Error {
public:
    using Error::Error;
};

/// A linear map does not define a morphism of the configuration.
class MorphismError : public Error {
public:
    using Error::Error;
};

enum class ConfigErrorKind {
    length_not_divisible,
    inconsistent_ell,
    zero_ell,
    dependent_tuple,
    unknown_point,
    duplicate_point,
    shape,
};

inline const char* to_string(ConfigErrorKind kind)
{
    switch (kind) {
    case ConfigErrorKind::length_not_divisible: return "length not divisible by weight";
    case ConfigErrorKind::inconsistent_ell: return "inconsistent ell across colors";
    case ConfigErrorKind::zero_ell: return "ell is zero";
    case ConfigErrorKind::dependent_tuple: return "dependent r-tuple";
    case ConfigErrorKind::unknown_point: return "unknown point name";
    case ConfigErrorKind::duplicate_point: return "duplicate point name";
    case ConfigErrorKind::shape: return "shape error";
    }
    return "configuration error";
}

/// Structural validation failure while building a configuration.
class ConfigError : public Error {
public:
    ConfigError(ConfigErrorKind kind, const std::string& detail)
        : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail)
    {
    }

    ConfigErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ConfigErrorKind kind_;
    std::string detail_;
};

/// Malformed input text (JSON document, rational literal, CLI list).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace eves
