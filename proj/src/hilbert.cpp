#include "infinigb/hilbert.hpp"

#include <algorithm>

#include "infinigb/division.hpp"
#include "infinigb/errors.hpp"
#include "infinigb/groebner.hpp"
#include "infinigb/regular.hpp"

namespace infinigb {

TruncatedSeries ambient_series(const WeightedAlphabet& weights, const VariableSet& variables,
                               std::size_t n) {
  auto s = TruncatedSeries::one(n);
  VarIndex last = weights.max_index_with_weight_at_most(n);
  if (variables.bound()) last = std::min(last, *variables.bound());
  for (VarIndex i = 1; i <= last; ++i)
    if (variables.contains(i)) s.div_one_minus_power(weights.weight(i));
  return s;
}

TruncatedSeries quotient_series_from_standard_monomials(const GroebnerBasis& basis,
                                                        const VariableSet& variables,
                                                        std::size_t n, Execution execution) {
  if (!is_homogeneous(basis.order()))
    throw NonHomogeneous("Hilbert series need a homogeneous monomial order");
  for (const auto& g : basis.elements())
    if (!g.is_homogeneous()) throw NonHomogeneous("Hilbert series need a homogeneous basis");
  const std::size_t top = std::min<std::size_t>(n, basis.window().degree_bound);
  const auto vars = variables.bounded(basis.window().var_bound);
  const auto lms = basis.leading_monomials();
  std::vector<TruncatedSeries::Coeff> counts(top + 1, 0);
  for_each_index(top + 1, execution, [&](std::size_t d) {
    counts[d] = static_cast<TruncatedSeries::Coeff>(
        standard_monomials(lms, d, basis.ring()->weights(), vars).size());
  });
  return TruncatedSeries(std::move(counts));
}

TruncatedSeries regular_sequence_series(const IdealPresentation& ideal, std::size_t n) {
  const auto& weights = ideal.ring()->weights();
  VarIndex last = std::max<VarIndex>(1, weights.max_index_with_weight_at_most(n));
  if (ideal.variables().bound()) last = std::min(last, *ideal.variables().bound());
  const auto window = TruncationWindow::make(std::max<VarIndex>(last, 1), std::max<Degree>(n, 1));
  const auto gens = ideal.instantiate(window);
  for (const auto& g : gens)
    if (!g.is_homogeneous() || g.degree() == 0)
      throw NonHomogeneous("generator " + g.to_string() + " is not homogeneous of positive degree");

  bool certified = gens.empty() || bayer_stillman_basis(gens, window).has_value();
  if (!certified) {
    RegularSequenceCandidate c{gens, ideal.variables(), last};
    certified = is_regular_sequence(c, n);
  }
  if (!certified)
    throw UncertifiedRegularity("the generators are not a regular sequence up to degree " +
                                std::to_string(n));
  auto s = ambient_series(weights, ideal.variables().bounded(last), n);
  for (const auto& g : gens) s.mul_one_minus_power(g.degree());
  return s;
}

}  // namespace infinigb
