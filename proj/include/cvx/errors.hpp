#pragma once

#include <stdexcept>
#include <string>

namespace cvx {

// Argument outside the structure's domain: foreign element, mismatched
// dimension, empty input where a nonempty one is required.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Data that fails a constructive invariant: weights not summing to one,
// an operation table breaking an axiom, a malformed descriptor.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace cvx
