#pragma once

#include <stdexcept>
#include <string>

namespace polycert {

// Raised when an enumeration domain is empty (e.g. more exponents than
// variables). Callers must not confuse this with a legitimate zero sum.
class EmptyDomainError : public std::invalid_argument {
public:
    explicit EmptyDomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an operation that must be exact (polynomial division, ratio
// discovery) produces a remainder. Always indicates an internal bug or a
// broken identity, never bad user input.
class ExactnessError : public std::logic_error {
public:
    explicit ExactnessError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polycert
