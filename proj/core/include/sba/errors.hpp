#pragma once

#include <stdexcept>
#include <string>

namespace sba {

/// Invalid configuration: bad bounds, bad parameter values, malformed config
/// documents. Maps to CLI exit code 1.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numeric failure inside an operation (root finder did not converge, pole on
/// the frequency grid, degenerate polynomial). Cost functions catch this and
/// substitute a sentinel; anywhere else it maps to CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem failure (unwritable output path). Maps to CLI exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sba
