#include "infinigb/random.hpp"

#include <algorithm>

namespace infinigb {

OrderKind random_order(Rng& rng, bool homogeneous_only) {
  if (homogeneous_only) {
    std::uniform_int_distribution<std::size_t> pick(0, kHomogeneousOrders.size() - 1);
    return kHomogeneousOrders[pick(rng)];
  }
  std::uniform_int_distribution<std::size_t> pick(0, kAllOrders.size() - 1);
  return kAllOrders[pick(rng)];
}

std::optional<Monomial> random_monomial(Rng& rng, const WeightedAlphabet& w, VarIndex n,
                                        Degree d) {
  const auto all = monomials_of_degree(d, w, [n](VarIndex i) { return i <= n; });
  if (all.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

namespace {

Coefficient random_coefficient(Rng& rng, const RingPtr& ring, long bound) {
  std::uniform_int_distribution<long> pick(1, bound);
  std::bernoulli_distribution negative(0.5);
  for (;;) {
    const long v = pick(rng) * (negative(rng) ? -1 : 1);
    auto c = ring->coefficient(v);
    if (!c.is_zero()) return c;
  }
}

}  // namespace

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, const RandomPolynomialShape& shape) {
  const auto& w = ring->weights();
  std::uniform_int_distribution<std::size_t> terms(1, std::max<std::size_t>(shape.max_terms, 1));
  std::uniform_int_distribution<Degree> degrees(1, std::max<Degree>(shape.max_degree, 1));
  for (;;) {
    const std::size_t t = terms(rng);
    const Degree common = degrees(rng);
    std::vector<std::pair<Coefficient, Monomial>> parts;
    for (std::size_t k = 0; k < t; ++k) {
      const Degree d = shape.homogeneous ? common : degrees(rng);
      auto m = random_monomial(rng, w, shape.variables, d);
      if (!m) continue;
      parts.emplace_back(random_coefficient(rng, ring, shape.coefficient_bound), std::move(*m));
    }
    Polynomial f(ring, std::move(parts));
    if (!f.is_zero()) return f;
  }
}

std::vector<Polynomial> random_generators(Rng& rng, const RingPtr& ring,
                                          const RandomPolynomialShape& shape,
                                          std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(max_gens, 1));
  std::vector<Polynomial> out;
  const std::size_t k = count(rng);
  for (std::size_t j = 0; j < k; ++j) out.push_back(random_polynomial(rng, ring, shape));
  return out;
}

WpSpec random_wp_spec(Rng& rng) {
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<std::uint32_t> pick_p(2, 5);
  std::uniform_int_distribution<std::size_t> pick_q(0, std::size(kPrimes) - 1);
  const std::uint32_t p = pick_p(rng);
  for (;;) {
    const std::uint32_t q = kPrimes[pick_q(rng)];
    if (p % q != 0) return WpSpec::make(VariableSet::nonzero_mod(q), p);
  }
}

}  // namespace infinigb
