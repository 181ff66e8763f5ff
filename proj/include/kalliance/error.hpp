#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kalliance {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: universe mismatch, violated preconditions, malformed sets.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Instance exceeds a configured size limit of an exact solver.
class CapacityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace kalliance
