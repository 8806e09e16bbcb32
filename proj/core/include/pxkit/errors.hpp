#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pxkit {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6 records, certificate documents).
// `offset` is the byte position of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

// An input is structurally valid but outside a solver's size cap.
// Callers that cannot afford to approximate refuse with this.
class CapError : public Error {
public:
    using Error::Error;
};

// A precondition on the input graph or arguments is violated
// (disconnected graph, not a tree, bad family parameters, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

} // namespace pxkit
