#pragma once

#include <stdexcept>
#include <string>

namespace bhseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element, a sum of elements, or a derived bound left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied argument violates a documented precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A request falls outside the domain where a closed form exists.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

[[noreturn]] void throw_internal(const std::string& what);

}  // namespace bhseq
