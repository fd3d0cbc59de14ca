#pragma once

#include <stdexcept>
#include <string>

namespace braceblocks {

/// Bad constructor parameters (non-prime p, order-of-b mismatch, ...).
struct InvalidParameter : std::invalid_argument {
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual input: group specs, map specs, words, table files.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An identity the construction guarantees failed to hold; signals a core
/// bug (or an impossible input cap), never plain user error.
struct VerificationError : std::logic_error {
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace braceblocks
