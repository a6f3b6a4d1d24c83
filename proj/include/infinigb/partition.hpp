#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "infinigb/kernels.hpp"
#include "infinigb/monomial.hpp"
#include "infinigb/variables.hpp"

namespace infinigb {

using Part = std::uint32_t;

/// Non-increasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless non-increasing and positive.
  explicit Partition(std::vector<Part> parts);
  static Partition from_unsorted(std::vector<Part> parts);
  /// "(5,4,1)" or "()"; whitespace allowed. Throws ParseError.
  static Partition parse(const std::string& text);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::uint64_t weight() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t multiplicity(Part k) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

/// The pair (W, p): W closed under multiplication by p, p >= 2.
struct WpSpec {
  VariableSet w;
  std::uint32_t p = 2;

  /// Throws std::invalid_argument when p < 2 or pW leaves W.
  static WpSpec make(VariableSet w, std::uint32_t p);
  static WpSpec ab() { return make(VariableSet::pm_mod(1, 3), 2); }
  static WpSpec ac() { return make(VariableSet::odd(), 3); }
  std::string describe() const;
};

/// A family of partitions described by a part predicate, a multiplicity cap,
/// and a minimum difference between consecutive parts.
class FamilySpec {
 public:
  /// Parts in W \ pW.
  static FamilySpec x(const WpSpec& spec);
  /// Parts in W, each appearing fewer than p times.
  static FamilySpec y(const WpSpec& spec);
  static FamilySpec a();  // parts = +-1 mod 6
  static FamilySpec b();  // distinct parts = +-1 mod 3
  static FamilySpec c();  // odd parts, multiplicity <= 2
  static FamilySpec p();  // parts = +-1 mod 5
  static FamilySpec q();  // consecutive parts differ by at least 2
  /// "A".."C", "P", "Q"; std::invalid_argument otherwise.
  static FamilySpec named(const std::string& name);

  bool admits_part(Part k) const { return part_(k); }
  std::size_t max_multiplicity() const noexcept { return max_mult_; }
  Part min_gap() const noexcept { return min_gap_; }
  bool contains(const Partition& lambda) const;
  const std::string& name() const noexcept { return name_; }

 private:
  FamilySpec(std::string name, std::function<bool(Part)> part, std::size_t max_mult, Part gap)
      : name_(std::move(name)), part_(std::move(part)), max_mult_(max_mult), min_gap_(gap) {}
  std::string name_;
  std::function<bool(Part)> part_;
  std::size_t max_mult_;
  Part min_gap_;
};

/// All members of weight n, in decreasing lexicographic order.
std::vector<Partition> enumerate(const FamilySpec& family, std::uint32_t n);
/// |family(n)| without materializing the partitions.
std::uint64_t count(const FamilySpec& family, std::uint32_t n);
/// count(family, k) for k = 0..n, one weight per task.
std::vector<std::uint64_t> count_table(const FamilySpec& family, std::uint32_t n,
                                       Execution execution = Execution::Serial);

/// lambda -> x^lambda = prod x_{lambda_j}.
Monomial partition_to_monomial(const Partition& lambda);
/// Inverse of partition_to_monomial; the partition has |lambda| = sum of indices.
Partition monomial_to_partition(const Monomial& m);

}  // namespace infinigb
