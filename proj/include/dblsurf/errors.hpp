#pragma once

#include <stdexcept>
#include <string>

namespace dblsurf {

/// Raised when an input violates an operation's contract.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation is asked about a surface it has no model for.
class UnsupportedSurface : public DomainError {
 public:
  explicit UnsupportedSurface(const std::string& what) : DomainError(what) {}
};

}  // namespace dblsurf
