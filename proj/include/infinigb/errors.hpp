#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infinigb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (order, weights or coefficient field differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Leading data, S-polynomials and divisions are undefined on the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

class WindowViolation : public Error {
 public:
  using Error::Error;
};

class UncertifiedBasis : public Error {
 public:
  using Error::Error;
};

class UncertifiedRegularity : public Error {
 public:
  using Error::Error;
};

class WrongOrder : public Error {
 public:
  using Error::Error;
};

class NotInFamily : public Error {
 public:
  using Error::Error;
};

class SeriesError : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow the monomial/polynomial/template grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace infinigb
