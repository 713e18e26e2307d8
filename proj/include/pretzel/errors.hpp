#pragma once

#include <stdexcept>
#include <string>

namespace pretzel {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BracketError : std::runtime_error {
    explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IndeterminateError : std::runtime_error {
    explicit IndeterminateError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnwrapError : std::runtime_error {
    explicit UnwrapError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfRangeError : std::runtime_error {
    explicit OutOfRangeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroSlopeError : std::runtime_error {
    explicit ZeroSlopeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ExcludedError : std::runtime_error {
    explicit ExcludedError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pretzel
