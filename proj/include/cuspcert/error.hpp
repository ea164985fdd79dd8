#pragma once

#include <stdexcept>
#include <string>

namespace cuspcert {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (det != 1, constant
// polynomial, mismatched moduli, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Problem size above a fixed guard (group order, prime size).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (e.g. ramified prime).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Degenerate input such as a polynomial vanishing mod p.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Malformed spec/config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Manifold data that contradicts itself (a relator not killed by a
// congruence image).
class InconsistentSpecError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed: a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cuspcert
