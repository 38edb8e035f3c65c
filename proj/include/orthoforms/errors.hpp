#pragma once

#include <stdexcept>
#include <string>

namespace orthoforms {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two polynomials over different variable spaces were combined.
class SpaceMismatchError : public Error {
public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
public:
  DivisionByZeroError() : Error("division by the zero polynomial") {}
};

/// Exact division failed; carries the leading monomial of the nonzero remainder.
class NotDivisibleError : public Error {
public:
  explicit NotDivisibleError(std::string leading_monomial)
      : Error("not divisible; remainder leading monomial " + leading_monomial),
        leading_monomial_(std::move(leading_monomial)) {}
  const std::string& leading_monomial() const { return leading_monomial_; }

private:
  std::string leading_monomial_;
};

/// Text parse failure; position is a 0-based byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class UnboundVariableError : public Error {
public:
  using Error::Error;
};

/// A monomial violates the balance precondition of the invariant rewrite.
class NotBalancedError : public Error {
public:
  using Error::Error;
};

/// A declared degree bound was exceeded or a dimension guard tripped.
class DegreeError : public Error {
public:
  using Error::Error;
};

/// Generic precondition violation; the message names the precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Corrupt or incompatible serialized data.
class FormatError : public Error {
public:
  using Error::Error;
};

}  // namespace orthoforms
