#pragma once

// Exception types raised by the library. Every error derives from mgb::Error
// so callers can catch the whole family at once.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("zero has no multiplicative inverse") {}
};

class NonPrimeField : public Error {
 public:
  explicit NonPrimeField(unsigned long long q)
      : Error("field size " + std::to_string(q) + " is not prime"), q_(q) {}
  unsigned long long q() const { return q_; }

 private:
  unsigned long long q_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch() : Error("monomials have different variable counts") {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& where) : Error(where + ": zero polynomial not allowed") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("root search on the zero polynomial") {}
};

class EmptyQueue : public Error {
 public:
  EmptyQueue() : Error("select on an empty pair queue") {}
};

class EmptyBatch : public Error {
 public:
  EmptyBatch() : Error("symbolic preprocessing on an empty batch") {}
};

class OrderNotLex : public Error {
 public:
  OrderNotLex() : Error("triangular shape check requires the lex order") {}
};

class InvalidSize : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// Raised when a polynomial exceeds the degree bound that adjoined field
/// equations guarantee. Always an internal error.
class BoundViolation : public Error {
 public:
  enum class Stage { created, stored };

  BoundViolation(Stage stage, std::string poly, unsigned degree, unsigned bound)
      : Error(std::string("degree bound violated at ") +
              (stage == Stage::created ? "created" : "stored") + " stage: degree " +
              std::to_string(degree) + " > " + std::to_string(bound) + " in " + poly),
        stage_(stage),
        poly_(std::move(poly)) {}

  Stage stage() const { return stage_; }
  const std::string& polynomial() const { return poly_; }

 private:
  Stage stage_;
  std::string poly_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mgb
