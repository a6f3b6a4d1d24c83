#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infinigb/kernels.hpp"
#include "infinigb/partition.hpp"
#include "infinigb/series.hpp"

namespace infinigb {

/// Named coefficient columns over weights 0..N; `passed` when every check
/// listed in `checks` holds and `failures` is empty.
struct IdentityReport {
  std::string name;
  std::size_t truncation = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<std::int64_t>> values;  // values[c][n]
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// prod_{m = +-1 (6)} 1/(1-t^m) = prod_{m = +-1 (3)} (1+t^m) = prod_{m odd} (1+t^m+t^{2m}),
/// cross-checked against |A(n)|, |B(n)|, |C(n)| and the Hilbert series of
/// S/I for the two binomial families.
IdentityReport schur_identity_check(std::size_t n, Execution execution = Execution::Serial);

/// prod_{m = +-1 (5)} 1/(1-t^m) = 1 + sum_m t^{m^2} / ((1-t)...(1-t^m)),
/// cross-checked against |P(n)| and |Q(n)|.
IdentityReport rr_identity_check(std::size_t n, Execution execution = Execution::Serial);

/// prod_{m in W \ pW} 1/(1-t^m) = prod_{m in W} (1 + t^m + ... + t^{(p-1)m}),
/// against |X(n)| and |Y(n)|.
IdentityReport xy_identity_check(const WpSpec& spec, std::size_t n,
                                 Execution execution = Execution::Serial);

/// prod over parts admitted by the predicate of 1 / (1 - t^m).
TruncatedSeries unrestricted_product(const std::function<bool(Part)>& admit, std::size_t n);
/// prod over admitted m of (1 + t^m + ... + t^{(count-1) m}).
TruncatedSeries bounded_product(const std::function<bool(Part)>& admit, std::size_t count,
                                std::size_t n);
/// 1 + sum_{m >= 1} t^{m^2} / ((1-t)...(1-t^m)), up to t^N.
TruncatedSeries rogers_ramanujan_sum(std::size_t n);

}  // namespace infinigb
