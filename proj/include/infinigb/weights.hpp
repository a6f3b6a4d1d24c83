#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace infinigb {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;
using Degree = std::uint64_t;

/// Degree assignment i -> d_i for the variables x_1, x_2, ...
///
/// A weight map is an explicit finite prefix d_1..d_k followed by an affine
/// tail d_i = scale * i + offset (i > k). With scale >= 1 only finitely many
/// variables have weight <= d for every d, so every graded piece of the
/// polynomial ring is finite dimensional. The default is d_i = i.
class WeightedAlphabet {
 public:
  struct Tail {
    std::uint64_t scale = 1;
    std::int64_t offset = 0;
    friend bool operator==(const Tail&, const Tail&) = default;
  };

  WeightedAlphabet() = default;

  /// Throws std::invalid_argument when a weight is < 1 or the tail is not increasing.
  WeightedAlphabet(std::vector<Degree> prefix, Tail tail);

  static WeightedAlphabet standard() { return {}; }

  Degree weight(VarIndex index) const;

  /// Largest index i with d_i <= d (0 when there is none).
  VarIndex max_index_with_weight_at_most(Degree d) const;

  bool is_standard() const noexcept { return prefix_.empty() && tail_ == Tail{}; }

  const std::vector<Degree>& prefix() const noexcept { return prefix_; }
  const Tail& tail() const noexcept { return tail_; }

  std::string describe() const;

  /// Parses "std" or a comma separated prefix with optional ";tail=A*i+B".
  static WeightedAlphabet parse(const std::string& text);

  friend bool operator==(const WeightedAlphabet&, const WeightedAlphabet&) = default;

 private:
  std::vector<Degree> prefix_;
  Tail tail_;
};

}  // namespace infinigb
