#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "infinigb/polynomial.hpp"

namespace infinigb {

/// Work inside S<n> = k[x_1..x_n] and only up to weighted degree D.
struct TruncationWindow {
  VarIndex var_bound = 1;
  Degree degree_bound = 1;

  /// Throws std::invalid_argument unless n >= 1 and D >= 1.
  static TruncationWindow make(VarIndex n, Degree d);

  bool admits(const Polynomial& f) const noexcept {
    return f.max_variable_index() <= var_bound && f.degree() <= degree_bound;
  }

  friend bool operator==(const TruncationWindow&, const TruncationWindow&) = default;
};

enum class Certificate { BuchbergerVerified, BayerStillman, Asserted };

std::string_view certificate_name(Certificate c) noexcept;

/// A finite Groebner basis of a truncated ideal, with its provenance.
///
/// Elements are kept in canonical order (leading monomial ascending, then
/// text), so two bases of the same ideal compare equal element-wise exactly
/// when they are the same set.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, TruncationWindow window,
                Certificate certificate, bool reduced);

  const RingPtr& ring() const noexcept { return ring_; }
  OrderKind order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const TruncationWindow& window() const noexcept { return window_; }
  Certificate certificate() const noexcept { return certificate_; }
  bool reduced() const noexcept { return reduced_; }
  bool is_certified() const noexcept { return certificate_ != Certificate::Asserted; }

  std::vector<Monomial> leading_monomials() const;

  /// S-pairs skipped because their lcm degree exceeded the degree bound.
  std::size_t discarded_pairs() const noexcept { return discarded_pairs_; }
  void set_discarded_pairs(std::size_t n) noexcept { discarded_pairs_ = n; }

  /// Filtration indices n at which the basis was checked against a
  /// Groebner basis of the n-th truncation.
  const std::vector<VarIndex>& verified_windows() const noexcept { return verified_windows_; }
  void set_verified_windows(std::vector<VarIndex> v) { verified_windows_ = std::move(v); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  TruncationWindow window_;
  Certificate certificate_;
  bool reduced_;
  std::size_t discarded_pairs_ = 0;
  std::vector<VarIndex> verified_windows_;
};

/// Every element monic and no leading monomial divides a term of another element.
bool is_reduced_set(std::span<const Polynomial> elements);

}  // namespace infinigb
