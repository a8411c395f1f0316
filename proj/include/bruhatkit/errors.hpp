// errors.hpp - error taxonomy shared by all bruhatkit modules.
#pragma once

#include <stdexcept>
#include <string>

namespace bruhatkit {

// Unsupported type/rank combination or malformed configuration input.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the operation's domain (wrong root system, non-reduced
// word, non-minimal representative, singular matrix, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds a hard enumeration bound.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A pair of elements required to be Bruhat-comparable is not.
struct NotComparableError : std::runtime_error {
  explicit NotComparableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bruhatkit
