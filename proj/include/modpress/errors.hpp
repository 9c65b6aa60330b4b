#pragma once

#include <stdexcept>
#include <string>

namespace modpress {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input: symbol below the alphabet, non-reduced endpoints, w <= 1, ...
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A configured cap was exceeded (state count, enumeration size).
struct ScaleError : Error {
  explicit ScaleError(const std::string& what) : Error(what) {}
};

// A certified result cannot be produced: tail not certifiable, undecidable
// boundary crossing on floating input, integer overflow in exact arithmetic.
struct CertificationError : Error {
  explicit CertificationError(const std::string& what) : Error(what) {}
};

}  // namespace modpress
