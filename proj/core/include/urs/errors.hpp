#pragma once

#include <stdexcept>
#include <string>

namespace urs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// Half power requested of something that is not a monomial in r, s.
struct UnsupportedRadical : Error {
    explicit UnsupportedRadical(const std::string& what) : Error("unsupported radical: " + what) {}
};

// Denominator vanishes under u -> q^(1/2), v -> q^(-1/2).
struct SpecializationPole : Error {
    explicit SpecializationPole(const std::string& what) : Error("specialization pole: " + what) {}
};

struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& what, size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

// A graded component exceeded the configured size caps.
struct ResourceLimit : Error {
    size_t estimate;
    ResourceLimit(const std::string& what, size_t est)
        : Error(what + " (estimated size " + std::to_string(est) + ")"), estimate(est) {}
};

}  // namespace urs
