#pragma once

#include <stdexcept>

namespace fermat4 {

// Caller handed an argument outside an operation's contract.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// q is inert in Z[i] (q = 3 mod 4), so it has no split factorization.
struct InertPrimeError : DomainError {
  using DomainError::DomainError;
};

// q = 2 ramifies in Z[i].
struct RamifiedPrimeError : DomainError {
  using DomainError::DomainError;
};

// n admits no representation as a sum of two squares.
struct NoRepresentationError : DomainError {
  using DomainError::DomainError;
};

// (A, B) is not a primitive pair.
struct NotPrimitiveError : DomainError {
  using DomainError::DomainError;
};

struct DivisionByZeroError : DomainError {
  using DomainError::DomainError;
};

struct SingularCurveError : DomainError {
  using DomainError::DomainError;
};

// Reduction of the curve at the requested prime is bad.
struct BadReductionError : DomainError {
  using DomainError::DomainError;
};

// Internal consistency failures. None of these can fire on valid inputs;
// they exist so that a bug surfaces as a loud error instead of a wrong answer.
struct StructureViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two split reductions at conjugate primes disagreed.
struct ConjugacyViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A two-squares law check failed against a computed eigenvalue.
struct LawViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No candidate curve reproduces a newform's eigenvalue row.
struct ModelUnavailableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fermat4
