#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "infinigb/basis.hpp"
#include "infinigb/kernels.hpp"

namespace infinigb {

struct BuchbergerOptions {
  /// Skip pairs with coprime leading monomials; their S-polynomial always
  /// reduces to zero through lt(g) f - lt(f) g = -(g - lt g) f + (f - lt f) g.
  bool coprime_skip = true;
  /// Serial: one pair at a time. Parallel: all pairs of the current lowest
  /// lcm degree are reduced against a frozen snapshot, then merged in order.
  Execution execution = Execution::Serial;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t coprime_skipped = 0;
  std::size_t discarded_over_degree = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  std::size_t batches = 0;
};

/// Buchberger completion inside the window: work in S<n>, process S-pairs in
/// order of increasing lcm degree (normal strategy) and discard pairs whose
/// lcm degree exceeds D. For homogeneous input under a homogeneous order the
/// result is a Groebner basis of (gens) in all degrees <= D.
///
/// Throws WindowViolation for a generator outside the window.
GroebnerBasis buchberger_truncated(std::span<const Polynomial> gens, const RingPtr& ring,
                                   TruncationWindow window, const BuchbergerOptions& options = {},
                                   BuchbergerStats* stats = nullptr);

struct CriterionReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::size_t pairs_beyond_window = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // indices into the input
};

/// Buchberger's criterion within the window: every S-pair with lcm degree
/// <= D reduces to 0. No pair is skipped, coprime or not.
CriterionReport verify_buchberger(std::span<const Polynomial> elements, TruncationWindow window,
                                  Execution execution = Execution::Serial);

/// The reduced basis of the same ideal: minimal leading monomials, monic,
/// tails fully reduced.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// Certified without S-pair work when the leading monomials are pairwise
/// coprime (a monomial regular sequence); nullopt otherwise.
std::optional<GroebnerBasis> bayer_stillman_basis(
    std::span<const Polynomial> gens, std::optional<TruncationWindow> window = std::nullopt);

/// For a PureLex basis: the elements lying in S<n> form a Groebner basis of
/// the restricted ideal. Checks that every element whose leading monomial
/// lies in S<n> lies there itself, and that the restriction passes the
/// windowed Buchberger criterion. Throws WrongOrder for other orders and
/// UncertifiedBasis for an asserted basis.
bool purelex_restriction_check(const GroebnerBasis& basis, VarIndex n);

/// Elements of `elements` lying in k[x_1..x_n].
std::vector<Polynomial> restrict_to(std::span<const Polynomial> elements, VarIndex n);

/// Whether two finite monomial sets generate the same monomial ideal.
bool same_monomial_ideal(std::span<const Monomial> a, std::span<const Monomial> b);

}  // namespace infinigb
