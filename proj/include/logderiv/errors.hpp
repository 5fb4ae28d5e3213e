#pragma once

#include <stdexcept>
#include <string>

namespace logderiv {

/// Evaluation point coincides with a pole of g_n (or of the level function).
class PoleHit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument outside the domain where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A predicate was called outside the hypotheses under which it is claimed.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RootIsolationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroAtEndpoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logderiv
