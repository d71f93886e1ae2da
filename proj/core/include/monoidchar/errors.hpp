#pragma once

#include <stdexcept>
#include <string>

namespace monoidchar {

// Base class for all structural errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AssociativityViolation : Error {
  int a, b, c;
  AssociativityViolation(int a_, int b_, int c_)
      : Error("associativity fails at (" + std::to_string(a_) + ", " +
              std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

struct IdentityViolation : Error {
  int a;
  explicit IdentityViolation(int a_)
      : Error("identity law fails at element " + std::to_string(a_)), a(a_) {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct ImageOutOfRange : Error {
  using Error::Error;
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct NotGroupElement : Error {
  int m;
  explicit NotGroupElement(int m_)
      : Error("element " + std::to_string(m_) + " is not a group element"),
        m(m_) {}
};

struct NotIdempotent : Error {
  int e;
  explicit NotIdempotent(int e_)
      : Error("element " + std::to_string(e_) + " is not idempotent"), e(e_) {}
};

struct WitnessInvalid : Error {
  using Error::Error;
};

struct NotCoprime : Error {
  using Error::Error;
};

struct NotDivisor : Error {
  using Error::Error;
};

struct ModulusTooSmall : Error {
  using Error::Error;
};

struct NotTransitive : Error {
  using Error::Error;
};

struct BijectionFailure : Error {
  using Error::Error;
};

struct NoTransformationData : Error {
  using Error::Error;
};

struct UnsupportedField : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct PartialTransition : Error {
  using Error::Error;
};

struct NotCyclic : Error {
  using Error::Error;
};

struct NotClassConstant : Error {
  using Error::Error;
};

struct InsufficientCoefficients : Error {
  using Error::Error;
};

}  // namespace monoidchar
