#include "infinigb/series.hpp"

#include <algorithm>
#include <sstream>

#include "infinigb/errors.hpp"

namespace infinigb {

namespace {

using Coeff = TruncatedSeries::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw SeriesError("series coefficient overflow");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw SeriesError("series coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw SeriesError("series coefficient overflow");
  return r;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SeriesError("a truncated series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::vector<Coeff> coeffs, std::size_t truncation)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(truncation + 1, 0);
}

TruncatedSeries TruncatedSeries::zero(std::size_t n) { return TruncatedSeries({}, n); }

TruncatedSeries TruncatedSeries::one(std::size_t n) { return TruncatedSeries({1}, n); }

TruncatedSeries TruncatedSeries::one_minus_power(std::size_t d, std::size_t n) {
  if (d == 0) throw SeriesError("1 - T^0 is not a unit");
  auto s = one(n);
  if (d <= n) s.coeffs_[d] = -1;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(std::size_t d, std::size_t n) {
  if (d == 0) throw SeriesError("1 / (1 - T^0) is undefined");
  auto s = zero(n);
  for (std::size_t k = 0; k <= n; k += d) s.coeffs_[k] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::partial_geometric(std::size_t d, std::size_t count,
                                                   std::size_t n) {
  if (d == 0) throw SeriesError("partial geometric series needs a positive step");
  auto s = zero(n);
  for (std::size_t j = 0; j < count && j * d <= n; ++j) s.coeffs_[j * d] = 1;
  return s;
}

TruncatedSeries::Coeff TruncatedSeries::operator[](std::size_t k) const {
  if (k >= coeffs_.size())
    throw SeriesError("coefficient of T^" + std::to_string(k) + " is beyond the truncation T^" +
                      std::to_string(truncation()));
  return coeffs_[k];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const {
  if (n > truncation()) throw SeriesError("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  auto s = TruncatedSeries::zero(n);
  for (std::size_t k = 0; k <= n; ++k) s.coeffs_[k] = checked_add(a.coeffs_[k], b.coeffs_[k]);
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  auto s = TruncatedSeries::zero(n);
  for (std::size_t k = 0; k <= n; ++k) s.coeffs_[k] = checked_sub(a.coeffs_[k], b.coeffs_[k]);
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  auto s = TruncatedSeries::zero(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      s.coeffs_[i + j] = checked_add(s.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return s;
}

TruncatedSeries TruncatedSeries::mul_unit_inverse(const TruncatedSeries& b) const {
  if (b.coeffs_[0] != 1 && b.coeffs_[0] != -1)
    throw SeriesError("division needs a constant term of +1 or -1");
  const std::size_t n = std::min(truncation(), b.truncation());
  auto q = zero(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Coeff acc = coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j)
      acc = checked_sub(acc, checked_mul(b.coeffs_[j], q.coeffs_[k - j]));
    q.coeffs_[k] = checked_mul(acc, b.coeffs_[0]);
  }
  return q;
}

TruncatedSeries& TruncatedSeries::mul_one_minus_power(std::size_t d) {
  if (d == 0) throw SeriesError("1 - T^0 is not a unit");
  for (std::size_t k = coeffs_.size(); k-- > d;)
    coeffs_[k] = checked_sub(coeffs_[k], coeffs_[k - d]);
  return *this;
}

TruncatedSeries& TruncatedSeries::div_one_minus_power(std::size_t d) {
  if (d == 0) throw SeriesError("1 / (1 - T^0) is undefined");
  for (std::size_t k = d; k < coeffs_.size(); ++k)
    coeffs_[k] = checked_add(coeffs_[k], coeffs_[k - d]);
  return *this;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Coeff c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    const Coeff a = c < 0 ? -c : c;
    if (k == 0) out << a;
    else {
      if (a != 1) out << a << '*';
      out << 'T';
      if (k > 1) out << '^' << k;
    }
  }
  if (first) out << '0';
  out << " + O(T^" << truncation() + 1 << ')';
  return out.str();
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  for (std::size_t k = 0; k <= n; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

}  // namespace infinigb
