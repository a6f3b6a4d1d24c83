#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace infinigb {

/// sum c_k T^k known exactly for k <= N.
///
/// Binary operations truncate to the smaller N; indexing beyond N throws
/// SeriesError instead of extrapolating. Arithmetic is checked: an int64
/// overflow throws SeriesError.
class TruncatedSeries {
 public:
  using Coeff = std::int64_t;

  /// Coefficients c_0..c_N, N = coeffs.size() - 1 (so coeffs must be nonempty).
  explicit TruncatedSeries(std::vector<Coeff> coeffs);
  /// Pads with zeros (or cuts) to exactly N + 1 coefficients.
  TruncatedSeries(std::vector<Coeff> coeffs, std::size_t truncation);

  static TruncatedSeries zero(std::size_t n);
  static TruncatedSeries one(std::size_t n);
  /// 1 - T^d.
  static TruncatedSeries one_minus_power(std::size_t d, std::size_t n);
  /// 1 / (1 - T^d) = 1 + T^d + T^{2d} + ...
  static TruncatedSeries geometric(std::size_t d, std::size_t n);
  /// 1 + T^d + ... + T^{(count-1) d}.
  static TruncatedSeries partial_geometric(std::size_t d, std::size_t count, std::size_t n);

  std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  Coeff operator[](std::size_t k) const;

  TruncatedSeries truncated(std::size_t n) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// a / b for b with constant term +-1.
  TruncatedSeries mul_unit_inverse(const TruncatedSeries& b) const;

  /// In-place products with 1 - T^d and 1 / (1 - T^d).
  TruncatedSeries& mul_one_minus_power(std::size_t d);
  TruncatedSeries& div_one_minus_power(std::size_t d);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<Coeff> coeffs_;
};

/// Coefficientwise equality up to min(N_a, N_b).
bool agree(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace infinigb
