#ifndef CGT_ERROR_HPP
#define CGT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cgt {

// Base class for all library failures.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (cycle notation, group specs, word syntax).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A configured size limit was exceeded (closure bound, enumeration bound).
struct BoundError : Error {
  explicit BoundError(const std::string& what) : Error(what) {}
};

// An internal consistency check failed (invalid table, bad oracle, ...).
struct VerifyError : Error {
  explicit VerifyError(const std::string& what) : Error(what) {}
};

}  // namespace cgt

#endif
