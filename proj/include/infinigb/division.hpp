#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infinigb/basis.hpp"
#include "infinigb/polynomial.hpp"
#include "infinigb/variables.hpp"

namespace infinigb {

/// f = sum quotients[i] * divisors[i] + remainder.
struct DivisionResult {
  std::vector<Polynomial> quotients;  // parallel to the divisor sequence
  Polynomial remainder;
  std::size_t steps = 0;              // reduction steps of the leading term
};

/// Division algorithm: repeatedly cancel the leading term of the working
/// polynomial with the first divisor whose leading monomial divides it, and
/// move non-reducible leading terms to the remainder. The remainder has no
/// monomial divisible by any lm(g), and lm(q_i g_i) <= lm(f).
///
/// Throws ZeroPolynomial for a zero divisor and RingMismatch across rings.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors);

/// Ideal membership through a certified basis; throws UncertifiedBasis otherwise.
bool is_member(const Polynomial& f, const GroebnerBasis& basis);

/// Monomials of weighted degree `degree` in the variables of `variables`
/// (restricted to x_1..x_n of the basis window) that are divisible by no
/// leading monomial of the basis. Requires a homogeneous order and basis.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, Degree degree,
                                         const VariableSet& variables = {});

/// Same as above for an explicit list of leading monomials.
std::vector<Monomial> standard_monomials(std::span<const Monomial> leading, Degree degree,
                                         const WeightedAlphabet& weights,
                                         const VariableSet& variables);

}  // namespace infinigb
