#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace infinigb {

/// Coefficient field: the rationals (characteristic 0) or a prime field GF(q).
struct Field {
  std::uint32_t characteristic = 0;

  static Field rationals() { return {}; }
  /// Throws std::invalid_argument unless q is a prime below 2^31.
  static Field prime(std::uint32_t q);

  bool is_rational() const noexcept { return characteristic == 0; }
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// An exact field element, always in canonical form: a reduced fraction over
/// Q, or a residue in [0, q) over GF(q). Mixing fields throws RingMismatch.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Coefficient(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  Coefficient(const mpq_class& value, Field field);

  Field field() const noexcept { return Field{modulus_}; }

  bool is_zero() const noexcept { return modulus_ ? residue_ == 0 : sgn(value_) == 0; }
  bool is_one() const noexcept { return modulus_ ? residue_ == 1 : value_ == 1; }

  Coefficient operator-() const;
  Coefficient inverse() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);

  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// Sign of the rational value; residues report +1 unless zero.
  int sign() const noexcept { return modulus_ ? (residue_ != 0) : sgn(value_); }

  /// "a" or "a/b"; residues print as integers in [0, q).
  std::string to_string() const;

  /// Rational value; for GF(q) the residue as an integer.
  mpq_class to_rational() const;

 private:
  mpq_class value_;
  std::uint32_t modulus_ = 0;
  std::uint64_t residue_ = 0;
};

}  // namespace infinigb
