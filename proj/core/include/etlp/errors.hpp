#pragma once

#include <stdexcept>
#include <string>

namespace etlp {

// Thrown when a parameter is outside its documented domain.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when vector/matrix dimensions do not conform.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown on NaN or other non-finite values where finite input is required.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed external data (binary records, event files).
// The message carries a byte offset or line number.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on invalid run configuration; names the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace etlp
