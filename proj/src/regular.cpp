#include "infinigb/regular.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "infinigb/errors.hpp"
#include "infinigb/groebner.hpp"
#include "infinigb/hilbert.hpp"

namespace infinigb {

namespace {

struct Prepared {
  RingPtr ring;
  std::vector<Polynomial> elements;
  VariableSet variables;
  VarIndex bound = 1;
};

Prepared prepare(const RegularSequenceCandidate& c) {
  Prepared p;
  if (c.elements.empty()) throw std::invalid_argument("empty candidate sequence");
  const RingPtr& ring = c.elements.front().ring();
  p.ring = is_homogeneous(ring->order()) ? ring : ring->with_order(OrderKind::HomRevLex);
  p.bound = c.var_bound;
  for (const auto& f : c.elements) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() == 0)
      throw NonHomogeneous("sequence elements must be homogeneous of positive degree: " +
                           f.to_string());
    if (c.var_bound == 0) p.bound = std::max(p.bound, f.max_variable_index());
    p.elements.push_back(f.in_ring(p.ring));
  }
  p.bound = std::max<VarIndex>(p.bound, 1);
  p.variables = c.variables.bounded(p.bound);
  for (const auto& f : p.elements)
    for (const auto& t : f.terms())
      for (const auto& fac : t.monomial.factors())
        if (!p.variables.contains(fac.index))
          throw std::invalid_argument(f.to_string() + " leaves the ambient variable set");
  return p;
}

TruncatedSeries series_of(const Prepared& p, std::span<const std::size_t> subset, Degree d) {
  if (subset.empty()) return ambient_series(p.ring->weights(), p.variables, d);
  std::vector<Polynomial> gens;
  for (auto k : subset) gens.push_back(p.elements.at(k));
  const auto basis =
      buchberger_truncated(gens, p.ring, TruncationWindow::make(p.bound, std::max<Degree>(d, 1)));
  return quotient_series_from_standard_monomials(basis, p.variables, d);
}

}  // namespace

TruncatedSeries quotient_hilbert_series(const RegularSequenceCandidate& candidate,
                                        std::span<const std::size_t> subset, Degree probe_degree) {
  return series_of(prepare(candidate), subset, probe_degree);
}

bool is_regular_sequence(const RegularSequenceCandidate& candidate, Degree probe_degree) {
  const auto p = prepare(candidate);
  std::vector<std::size_t> prefix;
  auto previous = series_of(p, prefix, probe_degree);
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    prefix.push_back(k);
    auto current = series_of(p, prefix, probe_degree);
    auto expected = previous;
    expected.mul_one_minus_power(p.elements[k].degree());
    if (current != expected) return false;
    previous = std::move(current);
  }
  return true;
}

bool check_fr_condition(const RegularSequenceCandidate& candidate, Degree probe_degree) {
  const auto p = prepare(candidate);
  const std::size_t m = p.elements.size();
  if (m > 16) throw std::invalid_argument("the subsequence check is limited to 16 elements");
  // Every subsequence is regular iff, for every index set P and every k above
  // all of P, appending f_k to P keeps the Hilbert relation.
  std::unordered_map<std::uint32_t, TruncatedSeries> cache;
  auto series = [&](std::uint32_t mask) -> const TruncatedSeries& {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1u) subset.push_back(k);
    return cache.emplace(mask, series_of(p, subset, probe_degree)).first->second;
  };
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const unsigned k = std::bit_width(mask) - 1;
    const std::uint32_t rest = mask & ~(1u << k);
    auto expected = series(rest);
    expected.mul_one_minus_power(p.elements[k].degree());
    if (series(mask) != expected) return false;
  }
  return true;
}

}  // namespace infinigb
