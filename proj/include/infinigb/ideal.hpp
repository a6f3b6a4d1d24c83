#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "infinigb/basis.hpp"
#include "infinigb/groebner.hpp"
#include "infinigb/variables.hpp"

namespace infinigb {

/// A generator rule i -> f_i written in the polynomial grammar, where
/// variable indices and exponents may be integer expressions in `i` and `p`:
///
///   x{i}^p - x{p*i}      x^p{i} - x{p*i}      x1*x{i} - x{i+1}
///
/// Index expressions go in braces; an exponent is a number, `i`, `p`, or a
/// braced expression.
class FamilyTemplate {
 public:
  /// Throws ParseError.
  static FamilyTemplate parse(const std::string& text);

  /// The generator at parameter i, or nullopt when an index drops below 1
  /// or an exponent below 0.
  std::optional<Polynomial> instantiate(const RingPtr& ring, std::int64_t i, std::int64_t p) const;

  const std::string& text() const noexcept { return text_; }

  struct Node;
  struct TermTemplate;

 private:
  std::string text_;
  std::shared_ptr<const std::vector<TermTemplate>> terms_;
};

/// An ideal of S or of the subring R = k[x_i | i in W]: either finitely many
/// explicit generators or a parametric family f_i, i in W.
class IdealPresentation {
 public:
  static IdealPresentation explicit_generators(RingPtr ring, std::vector<Polynomial> gens,
                                               VariableSet variables = {});
  static IdealPresentation family(RingPtr ring, FamilyTemplate rule, std::int64_t p,
                                  VariableSet index_set);
  /// G = { x_i^p - x_{p i} : i in W }; requires p >= 2 and pW inside W.
  static IdealPresentation binomial_family(RingPtr ring, std::uint32_t p, VariableSet w);

  const RingPtr& ring() const noexcept { return ring_; }
  const VariableSet& variables() const noexcept { return variables_; }
  bool is_family() const noexcept { return rule_.has_value(); }
  std::int64_t parameter() const noexcept { return p_; }

  /// Exactly the generators with every variable <= n and degree <= D,
  /// without duplicates. Family generators are checked to be nonzero and to
  /// use only variables of W (std::invalid_argument otherwise).
  std::vector<Polynomial> instantiate(TruncationWindow window) const;

  IdealPresentation with_order(OrderKind order) const;

  std::string describe() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> explicit_;
  std::optional<FamilyTemplate> rule_;
  std::int64_t p_ = 0;
  VariableSet variables_;
};

/// Union of per-window Groebner bases G_n of (instantiated generators) in
/// S<n>. The result carries certificate Asserted and the list of windows n at
/// which every generator of in(G_n) up to degree D is divisible by a leading
/// monomial of the union lying in S<n> (the containment that makes the
/// union a basis in the limit).
GroebnerBasis assemble_filtration(const IdealPresentation& ideal,
                                  const std::vector<TruncationWindow>& windows);

struct InitialIdealComparison {
  bool contains = false;  // in(I cap S<n>) inside (in(G) cap S<n>)
  bool equal = false;     // both directions, up to the degree bound
};

/// Compares in(G) cap S<n> with in(G_n) in degrees <= D.
InitialIdealComparison compare_initial_ideals(std::span<const Polynomial> basis,
                                              std::span<const Polynomial> truncated_basis,
                                              VarIndex n, Degree degree_bound);

struct StabilityReport {
  std::vector<Polynomial> stable;        // in every G_n of the trailing window
  std::vector<VarIndex> entered_at;      // parallel to `stable`: first m with element in G_m..G_max
  std::vector<Polynomial> unstable;      // in some but not every G_n of the trailing window
  std::vector<std::size_t> sizes;        // |G_n| for n = 1..max_n
  bool stabilized = false;               // G_n identical across the trailing window
  VarIndex max_n = 0;
  VarIndex window_len = 0;
  Degree degree_bound = 0;
  std::string caveat;
};

/// Reduced bases G_n of I cap S<n> for n = 1..max_n (degree <= D), scanned
/// for elements that persist through the last window_len indices. This is a
/// finite stand-in for the tail intersection over all n, which has no
/// effective bound; `caveat` states the approximation.
StabilityReport stabilized_reduced_basis(const IdealPresentation& ideal, VarIndex max_n,
                                         VarIndex window_len, Degree degree_bound);

}  // namespace infinigb
