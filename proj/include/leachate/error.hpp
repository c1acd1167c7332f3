#pragma once

#include <stdexcept>
#include <string>

namespace leachate {

/// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical or numerical input is out of range; the message names the field.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Unknown preset or enumerator name.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Malformed config document: message carries section, key and reason.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Explicit step refused because the stability limits are violated and the
/// policy is `error`.
class StabilityError : public Error {
public:
    using Error::Error;
};

/// A step produced NaN or Inf.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, long step, int i, int j)
        : Error(what), step_(step), i_(i), j_(j) {}

    long step() const noexcept { return step_; }
    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }

private:
    long step_;
    int i_;
    int j_;
};

/// Two profiles or fields of different shape were compared.
class ComparisonError : public Error {
public:
    using Error::Error;
};

/// Output destination could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace leachate
