#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infinigb/coefficient.hpp"
#include "infinigb/monomial.hpp"
#include "infinigb/order.hpp"

namespace infinigb {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ambient data shared by polynomials: the monomial order, the grading and
/// the coefficient field. Two rings are the same when all three agree.
class Ring {
 public:
  static RingPtr make(OrderKind order, WeightedAlphabet weights = {}, Field field = {});

  OrderKind order() const noexcept { return order_; }
  const WeightedAlphabet& weights() const noexcept { return weights_; }
  Field field() const noexcept { return field_; }

  Coefficient coefficient(long value) const { return Coefficient(mpq_class(value), field_); }
  Coefficient coefficient(const mpq_class& value) const { return Coefficient(value, field_); }

  Degree degree(const Monomial& m) const { return infinigb::degree(m, weights_); }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return infinigb::compare(a, b, order_, weights_);
  }

  RingPtr with_order(OrderKind order) const { return make(order, weights_, field_); }
  RingPtr with_field(Field field) const { return make(order_, weights_, field); }

  std::string describe() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(OrderKind order, WeightedAlphabet weights, Field field)
      : order_(order), weights_(std::move(weights)), field_(field) {}

  OrderKind order_;
  WeightedAlphabet weights_;
  Field field_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

/// One stored term; `degree` caches the weighted degree of `monomial`.
struct Term {
  Coefficient coeff;
  Monomial monomial;
  Degree degree = 0;
};

struct LeadingData {
  Coefficient lc;
  Monomial lm;
};

/// Sparse polynomial with exact coefficients.
///
/// Terms are kept strictly decreasing under the ring's order with no zero
/// coefficients, so structural equality is mathematical equality and the
/// leading term is always terms().front().
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<std::pair<Coefficient, Monomial>> terms);

  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial term(RingPtr ring, const Coefficient& c, Monomial m);
  static Polynomial monomial(RingPtr ring, Monomial m);
  static Polynomial variable(RingPtr ring, VarIndex index, Exponent exponent = 1);
  /// Grammar: `3/2*x1^2*x3 - x7`. Throws ParseError with the offending position.
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Throws ZeroPolynomial.
  LeadingData leading() const;
  const Monomial& lm() const;
  const Coefficient& lc() const;

  /// Largest weighted degree of a term; 0 for the zero polynomial.
  Degree degree() const noexcept;
  bool is_homogeneous() const noexcept;

  /// Smallest n with this polynomial in k[x_1..x_n]; 0 for constants.
  VarIndex max_variable_index() const noexcept;

  Polynomial monic() const;
  /// f - lt(f).
  Polynomial tail() const;

  /// The same polynomial re-sorted in another ring. Over QQ the target may be a
  /// prime field; coefficients are reduced and a zero denominator throws.
  Polynomial in_ring(RingPtr ring) const;
  Polynomial with_order(OrderKind order) const { return in_ring(ring_->with_order(order)); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  Polynomial scale(const Coefficient& c) const;
  /// c * m * f; order-preserving because monomial orders are multiplicative.
  Polynomial mul_term(const Coefficient& c, const Monomial& m) const;

  /// *this -= c * m * g, merging in one pass.
  void sub_mul_term(const Coefficient& c, const Monomial& m, const Polynomial& g);

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void check_ring(const Polynomial& g) const;
  Term make_term(Coefficient c, Monomial m) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// (lcm / lt(f)) * f - (lcm / lt(g)) * g with lcm = LCM(lm f, lm g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Orders polynomials by (lm under the ambient order, then text).
struct CanonicalLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const;
};

void sort_canonical(std::vector<Polynomial>& polys);

}  // namespace infinigb
