#include "infinigb/coefficient.hpp"

#include <stdexcept>

#include "infinigb/errors.hpp"

namespace infinigb {

namespace {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::uint64_t residue_of(const mpz_class& z, std::uint32_t q) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), q);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1;
  base %= q;
  while (e) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return r;
}

void check_same(const Coefficient& a, const Coefficient& b) {
  if (!(a.field() == b.field()))
    throw RingMismatch("coefficients from different fields: " + a.field().describe() + " vs " +
                       b.field().describe());
}

}  // namespace

Field Field::prime(std::uint32_t q) {
  if (q >= (1u << 31) || !is_prime(q))
    throw std::invalid_argument("GF(q) requires a prime q < 2^31, got " + std::to_string(q));
  return Field{q};
}

std::string Field::describe() const {
  return characteristic == 0 ? std::string("QQ") : "GF(" + std::to_string(characteristic) + ")";
}

Coefficient::Coefficient(const mpq_class& value, Field field) : modulus_(field.characteristic) {
  if (modulus_ == 0) {
    value_ = value;
    value_.canonicalize();
    return;
  }
  const auto num = residue_of(value.get_num(), modulus_);
  const auto den = residue_of(value.get_den(), modulus_);
  if (den == 0)
    throw std::domain_error("denominator " + value.get_den().get_str() + " vanishes in " +
                            field.describe());
  residue_ = num * pow_mod(den, modulus_ - 2, modulus_) % modulus_;
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  if (modulus_)
    r.residue_ = residue_ ? modulus_ - residue_ : 0;
  else
    r.value_ = -value_;
  return r;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero coefficient");
  Coefficient r = *this;
  if (modulus_)
    r.residue_ = pow_mod(residue_, modulus_ - 2, modulus_);
  else
    r.value_ = 1 / value_;
  return r;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  check_same(a, b);
  Coefficient r = a;
  if (a.modulus_)
    r.residue_ = (a.residue_ + b.residue_) % a.modulus_;
  else
    r.value_ += b.value_;
  return r;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
  check_same(a, b);
  Coefficient r = a;
  if (a.modulus_)
    r.residue_ = (a.residue_ + a.modulus_ - b.residue_) % a.modulus_;
  else
    r.value_ -= b.value_;
  return r;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  check_same(a, b);
  Coefficient r = a;
  if (a.modulus_)
    r.residue_ = a.residue_ * b.residue_ % a.modulus_;
  else
    r.value_ *= b.value_;
  return r;
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ ? a.residue_ == b.residue_ : a.value_ == b.value_;
}

std::string Coefficient::to_string() const {
  return modulus_ ? std::to_string(residue_) : value_.get_str();
}

mpq_class Coefficient::to_rational() const {
  return modulus_ ? mpq_class(static_cast<unsigned long>(residue_)) : value_;
}

}  // namespace infinigb
