#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radgen {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed; `pos` is a 0-based byte offset.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t pos_)
        : Error(msg + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

// Mixed operands from different ring contexts (or different fields/moduli).
struct ContextMismatchError : Error {
    explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

// A configured pair/basis cap was hit during a Groebner computation.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// Invalid value-level input: malformed partition, zero divisor, n out of range...
struct ValueError : Error {
    explicit ValueError(const std::string& msg) : Error(msg) {}
};

// A construction refused to emit output because its side condition failed.
struct ConditionError : Error {
    explicit ConditionError(const std::string& msg) : Error(msg) {}
};

}  // namespace radgen
