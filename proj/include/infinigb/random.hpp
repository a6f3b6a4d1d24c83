#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "infinigb/partition.hpp"
#include "infinigb/polynomial.hpp"

namespace infinigb {

using Rng = std::mt19937_64;

struct RandomPolynomialShape {
  VarIndex variables = 4;      // x_1..x_n
  Degree max_degree = 6;       // weighted
  std::size_t max_terms = 3;   // at least one term
  long coefficient_bound = 3;  // nonzero coefficients in [-b, b]
  bool homogeneous = false;
};

OrderKind random_order(Rng& rng, bool homogeneous_only);

/// A uniformly chosen monomial of weighted degree exactly d in x_1..x_n, or
/// nullopt when there is none.
std::optional<Monomial> random_monomial(Rng& rng, const WeightedAlphabet& w, VarIndex n, Degree d);

/// A nonzero random polynomial of the given shape.
Polynomial random_polynomial(Rng& rng, const RingPtr& ring, const RandomPolynomialShape& shape);

/// 1..max_gens random generators.
std::vector<Polynomial> random_generators(Rng& rng, const RingPtr& ring,
                                          const RandomPolynomialShape& shape, std::size_t max_gens);

/// W = { m : m != 0 mod q } for a random prime q coprime to a random p.
WpSpec random_wp_spec(Rng& rng);

}  // namespace infinigb
