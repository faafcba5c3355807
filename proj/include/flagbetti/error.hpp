#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagbetti {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 words, CLI tuples). Carries the byte offset
/// of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A parameter violates an operation's precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A graph would exceed the 64-vertex cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A resource guard tripped (face count, recursion width, enumeration size).
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace flagbetti
