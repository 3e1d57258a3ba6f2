#pragma once

#include <stdexcept>
#include <string>

namespace linorbit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance data violates its problem's invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Witness is malformed for the instance it claims to certify.
class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

// Certificate, reduction or chain link applied to the wrong problem kind.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

// Job Sequencing carries no data, so nothing can be measured, solved or generated.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the space exceeds the caller's cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition (missing slack bound, bad generator parameters).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Unknown reduction id or other name lookup failure.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace linorbit
