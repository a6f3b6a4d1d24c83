#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infinigb/weights.hpp"

namespace infinigb {

/// A decidable set of variable indices W (equivalently of partition parts),
/// given by residue classes, optionally capped at an upper bound.
class VariableSet {
 public:
  /// Every positive index.
  VariableSet() = default;

  static VariableSet all() { return {}; }
  /// {i : i mod modulus in residues}.
  static VariableSet residues(std::uint32_t modulus, std::vector<std::uint32_t> residues);
  static VariableSet odd() { return residues(2, {1}); }
  /// {i : i = +-k mod m}; pm_mod(1, 3) is {1, 2, 4, 5, 7, ...}.
  static VariableSet pm_mod(std::uint32_t k, std::uint32_t m);
  /// {i : i != 0 mod q}.
  static VariableSet nonzero_mod(std::uint32_t q);
  static VariableSet range(VarIndex upto) { return all().bounded(upto); }

  /// Accepts: all, odd, pm<k>mod<m>, nonzeromod<q>, res<r1>,<r2>,...mod<m>.
  static VariableSet parse(const std::string& text);

  bool contains(VarIndex i) const noexcept;

  /// Intersection with {1..n} (keeps the tighter bound).
  VariableSet bounded(VarIndex n) const;
  std::optional<VarIndex> bound() const noexcept { return bound_; }

  /// Members <= n in increasing order.
  std::vector<VarIndex> members_up_to(VarIndex n) const;

  /// Checks p*w in W for every member w with p*w <= probe_limit.
  bool scaled_into_itself(std::uint32_t p, VarIndex probe_limit) const;

  std::string describe() const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::uint32_t modulus_ = 1;
  std::vector<std::uint32_t> residues_ = {0};
  std::optional<VarIndex> bound_;
};

}  // namespace infinigb
