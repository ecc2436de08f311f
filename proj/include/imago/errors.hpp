#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imago {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (word, group/ring spec, polynomial, rational).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// An exhaustive computation would exceed a configured resource cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Precondition violation on otherwise well-formed input.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace imago
