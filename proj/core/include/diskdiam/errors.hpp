#pragma once

#include <stdexcept>
#include <string>

namespace diskdiam {

/// A point or radius lies outside the region where a function is certified.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An argument violates an operation's contract (wrong size, forbidden value).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hypothesis of a verifier does not hold for the supplied input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input for which the requested quantity is undefined (e.g. a constant map).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnivalenceViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diskdiam
