#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infinigb/polynomial.hpp"
#include "infinigb/series.hpp"
#include "infinigb/variables.hpp"

namespace infinigb {

/// A finite ordered family of homogeneous polynomials of positive degree in
/// R = k[x_i | i in variables, i <= var_bound]. var_bound 0 means "largest
/// index used by an element".
struct RegularSequenceCandidate {
  std::vector<Polynomial> elements;
  VariableSet variables;
  VarIndex var_bound = 0;
};

/// Hilbert series of R / (elements) up to T^D, from a truncated Groebner basis.
TruncatedSeries quotient_hilbert_series(const RegularSequenceCandidate& candidate,
                                        std::span<const std::size_t> subset, Degree probe_degree);

/// Regular in the given order, decided prefix by prefix: f_k is a
/// non-zero-divisor modulo (f_1..f_{k-1}) exactly when
/// H(R/(f_1..f_k)) = H(R/(f_1..f_{k-1})) (1 - T^deg f_k). Exact up to T^D.
/// Throws NonHomogeneous for a non-homogeneous or constant element.
bool is_regular_sequence(const RegularSequenceCandidate& candidate, Degree probe_degree);

/// FR-condition: every subsequence, in the inherited order, is regular.
bool check_fr_condition(const RegularSequenceCandidate& candidate, Degree probe_degree);

}  // namespace infinigb
