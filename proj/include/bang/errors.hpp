#pragma once

#include <stdexcept>
#include <string>

namespace bang {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operand mentions a basis index outside the context it is used in.
class ContextError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured size limit (partition cap).
class SizeLimitError : public Error {
public:
    using Error::Error;
};

} // namespace bang
