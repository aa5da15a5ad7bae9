#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace springer {

// Enumeration request beyond the configured cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::int64_t requested, std::int64_t cap)
        : std::runtime_error("requested weight " + std::to_string(requested) +
                             " exceeds enumeration cap " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::int64_t requested() const noexcept { return requested_; }
    std::int64_t cap() const noexcept { return cap_; }

private:
    std::int64_t requested_;
    std::int64_t cap_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dominance-style orders only compare objects of equal weight.
class WeightMismatchError : public PreconditionError {
public:
    WeightMismatchError(std::int64_t lhs, std::int64_t rhs)
        : PreconditionError("weight mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}
};

// A state the underlying bijection rules out. Signals a bug, not bad input.
class InvariantViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input; position is a 1-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace springer
