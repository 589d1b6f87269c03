#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recipcas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("denominator is the zero polynomial") {}
  explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation requires a nonzero polynomial") {}
  explicit ZeroPolynomial(const std::string& what) : Error(what) {}
};

class ZeroValue : public Error {
 public:
  ZeroValue() : Error("operation requires a nonzero value") {}
  explicit ZeroValue(const std::string& what) : Error(what) {}
};

class VariableMismatch : public Error {
 public:
  VariableMismatch() : Error("operands have different variable counts") {}
  explicit VariableMismatch(const std::string& what) : Error(what) {}
};

class NotAUnit : public Error {
 public:
  NotAUnit() : Error("reciprocal sum is not a unit (zero constant residue)") {}
};

class TermBudgetExceeded : public Error {
 public:
  explicit TermBudgetExceeded(std::size_t budget)
      : Error("unit inversion exceeded the term budget of " + std::to_string(budget)) {}
};

class InvalidPair : public Error {
 public:
  explicit InvalidPair(const std::string& what) : Error(what) {}
};

class UnsupportedArity : public Error {
 public:
  explicit UnsupportedArity(const std::string& what) : Error(what) {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

class InternalContradiction : public Error {
 public:
  explicit InternalContradiction(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position) {}
};

}  // namespace recipcas
