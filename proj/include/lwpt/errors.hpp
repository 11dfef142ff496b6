#pragma once

#include <stdexcept>
#include <string>

namespace lwpt {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shapes or dimensions do not line up.
struct ShapeError : Error {
    using Error::Error;
};

// A parameter value is outside its legal range, or an API was misused.
struct ValueError : Error {
    using Error::Error;
};

// A softmax row was fully masked out.
struct MaskError : Error {
    using Error::Error;
};

// Run configuration is inconsistent or references missing files.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input data; message carries file/line context.
struct ParseError : Error {
    using Error::Error;
};

// Unknown document id, label name, or parameter name.
struct LookupError : Error {
    using Error::Error;
};

} // namespace lwpt
