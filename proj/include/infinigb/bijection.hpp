#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "infinigb/kernels.hpp"
#include "infinigb/partition.hpp"
#include "infinigb/polynomial.hpp"

namespace infinigb {

/// How phi and psi are evaluated: by division in the polynomial ring, or by
/// the direct part-merging and part-splitting rules used as an oracle.
enum class Route { Division, Oracle };

/// phi: X -> Y and psi: Y -> X for one (W, p), on partitions of weight <= n.
///
/// phi(lambda) is the partition of the remainder of x^lambda on division by
/// { x_i^p - x_{pi} } under the anti-reverse-lexicographic order (a reduced
/// basis there, leading monomials x_i^p). psi(mu) is the partition of the
/// remainder of x^mu under the lexicographic order (a basis whose leading
/// monomials are x_{pi}).
class BijectionEngine {
 public:
  BijectionEngine(WpSpec spec, std::uint32_t max_weight);

  const WpSpec& spec() const noexcept { return spec_; }
  std::uint32_t max_weight() const noexcept { return max_weight_; }

  /// NotInFamily unless lambda is in X; std::invalid_argument above max_weight.
  Partition phi(const Partition& lambda, Route route = Route::Division) const;
  /// NotInFamily unless mu is in Y.
  Partition psi(const Partition& mu, Route route = Route::Division) const;

  const std::vector<Polynomial>& merge_basis() const noexcept { return merge_; }
  const std::vector<Polynomial>& split_basis() const noexcept { return split_; }

 private:
  void check_weight(const Partition& lambda) const;
  Partition by_division(const Partition& lambda, const std::vector<Polynomial>& basis) const;

  WpSpec spec_;
  std::uint32_t max_weight_;
  FamilySpec x_;
  FamilySpec y_;
  std::vector<Polynomial> merge_;  // anti-reverse-lexicographic ring
  std::vector<Polynomial> split_;  // lexicographic ring
};

/// Oracle rules: phi merges p equal parts i into pi while possible, smallest
/// first; psi splits every part pi (i in W) into p copies of i.
Partition merge_parts(const Partition& lambda, const WpSpec& spec);
Partition split_parts(const Partition& mu, const WpSpec& spec);

struct BijectionReport {
  std::uint32_t n = 0;
  std::size_t size_x = 0;
  std::size_t size_y = 0;
  bool phi_into_y = true;
  bool psi_into_x = true;
  bool phi_injective = true;
  bool psi_phi_identity = true;
  bool phi_psi_identity = true;
  bool routes_agree = true;
  std::vector<std::pair<Partition, Partition>> rows;  // (lambda, phi(lambda)), lambda in X(n)
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return size_x == size_y && phi_into_y && psi_into_x && phi_injective && psi_phi_identity &&
           phi_psi_identity && routes_agree;
  }
};

/// Checks phi and psi on all of X(n) and Y(n), one partition per task.
BijectionReport verify_bijection(const WpSpec& spec, std::uint32_t n,
                                 Execution execution = Execution::Serial);

}  // namespace infinigb
