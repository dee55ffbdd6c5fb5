#pragma once

#include <stdexcept>
#include <string>

namespace drz {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural misuse of an operation (wrong shapes, wrong domain, ...).
struct DimensionMismatch : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct UnsupportedDomain : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct InvalidDomain : Error { using Error::Error; };

// Idempotent-calculus preconditions.
struct NonIdempotentInput : Error { using Error::Error; };
struct NotDrazinInvertible : Error { using Error::Error; };
struct NotAProjector : Error { using Error::Error; };
struct NotStarReducing : Error { using Error::Error; };
struct SixNotInvertible : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// Harness / generator limits.
struct RetryLimitExceeded : Error { using Error::Error; };
struct ContextTooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// A computed result failed its own defining axioms.  Carries the label of
// the violated equation so fuzz harnesses can report it as a finding.
struct IdentityViolation : Error {
  explicit IdentityViolation(std::string eq, const std::string& detail = "")
      : Error(detail.empty() ? "identity violated: " + eq
                             : "identity violated: " + eq + " (" + detail + ")"),
        equation(std::move(eq)) {}
  std::string equation;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalCheckFailure : Error { using Error::Error; };

}  // namespace drz
