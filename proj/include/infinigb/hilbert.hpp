#pragma once

#include <cstddef>

#include "infinigb/basis.hpp"
#include "infinigb/ideal.hpp"
#include "infinigb/kernels.hpp"
#include "infinigb/series.hpp"
#include "infinigb/variables.hpp"

namespace infinigb {

/// H_R(T) = prod over i in `variables` of 1 / (1 - T^{d_i}), up to T^N.
TruncatedSeries ambient_series(const WeightedAlphabet& weights, const VariableSet& variables,
                               std::size_t n);

/// H_{R/I} from the standard monomials of a truncated basis, degree by degree.
/// The truncation is min(N, D) for the basis window D, and only variables up
/// to the window's index bound are counted. Needs a homogeneous order and
/// homogeneous elements (NonHomogeneous otherwise).
TruncatedSeries quotient_series_from_standard_monomials(const GroebnerBasis& basis,
                                                        const VariableSet& variables,
                                                        std::size_t n,
                                                        Execution execution = Execution::Serial);

/// H_R(T) prod (1 - T^{deg f_i}) for generators forming a regular sequence.
/// Regularity is certified either by pairwise coprime leading monomials or
/// by the Hilbert prefix test up to T^N; UncertifiedRegularity otherwise.
TruncatedSeries regular_sequence_series(const IdealPresentation& ideal, std::size_t n);

}  // namespace infinigb
