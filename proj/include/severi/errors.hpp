#pragma once

#include <stdexcept>
#include <string>

namespace severi {

// All library failures derive from Error so the C layer can map them to
// status codes in one place.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// Truncated series too short for the requested transform.
class InsufficientOrder : public Error {
public:
  using Error::Error;
};

// Enumeration larger than the configured letter budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// Arithmetic that has no exact integer answer (non-unit constant terms,
// inexact division).
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace severi
