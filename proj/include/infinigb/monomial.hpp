#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infinigb/weights.hpp"

namespace infinigb {

struct Factor {
  VarIndex index;
  Exponent exponent;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A monomial x^a over the countably infinite alphabet x_1, x_2, ...
///
/// Stored sparsely as (index, exponent) pairs with strictly increasing
/// indices and positive exponents; the empty sequence is the monomial 1.
class Monomial {
 public:
  Monomial() = default;

  /// Accepts factors in any order; repeated indices are merged and zero
  /// exponents dropped. Index 0 is rejected.
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(VarIndex index, Exponent exponent = 1);

  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::size_t support_size() const noexcept { return factors_.size(); }

  Exponent exponent(VarIndex index) const noexcept;

  /// Smallest n with this monomial in k[x_1..x_n]; 0 for the monomial 1.
  VarIndex max_index() const noexcept { return factors_.empty() ? 0 : factors_.back().index; }

  Exponent total_exponent() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Structural order on exponent sequences, for use as a container key
  /// only. It is not a monomial order; see compare() in order.hpp.
  friend bool structural_less(const Monomial& a, const Monomial& b);

 private:
  struct Sorted {};
  Monomial(Sorted, std::vector<Factor> factors) : factors_(std::move(factors)) {}

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend std::optional<Monomial> try_divide(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  std::vector<Factor> factors_;
};

struct StructuralLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return structural_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Degree degree(const Monomial& m, const WeightedAlphabet& w);

Monomial operator*(const Monomial& a, const Monomial& b);

/// q with b * q == a, or nullopt when b does not divide a.
std::optional<Monomial> try_divide(const Monomial& a, const Monomial& b);

/// True when d divides m exponentwise.
bool divides(const Monomial& d, const Monomial& m) noexcept;

Monomial lcm(const Monomial& a, const Monomial& b);

/// Disjoint supports, equivalently lcm(a, b) == a * b.
bool coprime(const Monomial& a, const Monomial& b) noexcept;

/// Renders as "x1^2*x3"; the monomial 1 renders as "1".
std::string to_string(const Monomial& m);

/// Parses the rendering grammar, allowing whitespace around tokens.
Monomial parse_monomial(std::string_view text);

/// All monomials of weighted degree d whose variables satisfy `admit`
/// (default: every variable). The result is sorted structurally.
std::vector<Monomial> monomials_of_degree(Degree d, const WeightedAlphabet& w,
                                          const std::function<bool(VarIndex)>& admit = {});

}  // namespace infinigb
