#pragma once

#include <stdexcept>
#include <string>

namespace stdbases {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed polynomial text or problem file. Carries a byte offset into the
/// offending input when one is known (npos otherwise).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    explicit ParseError(const std::string& what)
        : Error(what), position(std::string::npos) {}
    std::size_t position;
};

struct RingMismatchError : Error {
    using Error::Error;
};

/// Input outside the supported hypotheses (for instance a basis whose ideal
/// saturates to the whole irrelevant ideal, or to the unit ideal).
struct UnsupportedInputError : Error {
    using Error::Error;
};

/// Two independent computation routes disagreed. This is never a property of
/// the input: it signals a bug in the engine and is reported loudly.
struct InternalCheckError : Error {
    using Error::Error;
};

}  // namespace stdbases
