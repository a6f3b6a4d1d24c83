#include "infinigb/division.hpp"

#include <algorithm>

#include "infinigb/errors.hpp"

namespace infinigb {

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (!same_ring(g.ring(), f.ring())) throw RingMismatch("divisor from another ring");
  }
  DivisionResult result{std::vector<Polynomial>(divisors.size(), Polynomial(f.ring())),
                        Polynomial(f.ring()), 0};
  std::vector<std::pair<Coefficient, Monomial>> rest;
  Polynomial work = f;
  while (!work.is_zero()) {
    const auto& lead = work.terms().front();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      auto q = try_divide(lead.monomial, g.lm());
      if (!q) continue;
      const Coefficient c = lead.coeff / g.lc();
      result.quotients[i] += Polynomial::term(f.ring(), c, *q);
      work.sub_mul_term(c, *q, g);
      ++result.steps;
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.emplace_back(lead.coeff, lead.monomial);
      work = work.tail();
    }
  }
  result.remainder = Polynomial(f.ring(), std::move(rest));
  return result;
}

Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (!same_ring(g.ring(), f.ring())) throw RingMismatch("divisor from another ring");
  }
  std::vector<std::pair<Coefficient, Monomial>> rest;
  Polynomial work = f;
  while (!work.is_zero()) {
    const auto& lead = work.terms().front();
    bool reduced = false;
    for (const auto& g : divisors) {
      auto q = try_divide(lead.monomial, g.lm());
      if (!q) continue;
      work.sub_mul_term(lead.coeff / g.lc(), *q, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.emplace_back(lead.coeff, lead.monomial);
      work = work.tail();
    }
  }
  return Polynomial(f.ring(), std::move(rest));
}

bool is_member(const Polynomial& f, const GroebnerBasis& basis) {
  if (!basis.is_certified())
    throw UncertifiedBasis("membership needs a certified Groebner basis");
  if (!same_ring(f.ring(), basis.ring())) throw RingMismatch("membership across rings");
  return remainder(f, basis.elements()).is_zero();
}

std::vector<Monomial> standard_monomials(std::span<const Monomial> leading, Degree degree,
                                         const WeightedAlphabet& weights,
                                         const VariableSet& variables) {
  auto candidates = monomials_of_degree(degree, weights,
                                        [&](VarIndex v) { return variables.contains(v); });
  std::erase_if(candidates, [&](const Monomial& m) {
    return std::any_of(leading.begin(), leading.end(),
                       [&](const Monomial& l) { return divides(l, m); });
  });
  return candidates;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, Degree degree,
                                         const VariableSet& variables) {
  if (!is_homogeneous(basis.order()))
    throw NonHomogeneous("standard monomials need a homogeneous monomial order");
  for (const auto& g : basis.elements())
    if (!g.is_homogeneous()) throw NonHomogeneous("standard monomials need a homogeneous basis");
  const auto lms = basis.leading_monomials();
  return standard_monomials(lms, degree, basis.ring()->weights(),
                            variables.bounded(basis.window().var_bound));
}

}  // namespace infinigb
