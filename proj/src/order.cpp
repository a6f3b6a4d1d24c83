#include "infinigb/order.hpp"

#include <stdexcept>
#include <string>

namespace infinigb {

namespace {

// Exponents (a_i, b_i) at the first index where a and b differ, walking the
// two sparse sequences in increasing index order. Absent entries read as 0.
struct Difference {
  bool found = false;
  Exponent a = 0;
  Exponent b = 0;
};

Difference first_difference(std::span<const Factor> a, std::span<const Factor> b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->index < j->index)) return {true, i->exponent, 0};
    if (i == a.end() || j->index < i->index) return {true, 0, j->exponent};
    if (i->exponent != j->exponent) return {true, i->exponent, j->exponent};
    ++i;
    ++j;
  }
  return {};
}

Difference last_difference(std::span<const Factor> a, std::span<const Factor> b) {
  auto i = a.rbegin(), j = b.rbegin();
  while (i != a.rend() || j != b.rend()) {
    if (j == b.rend() || (i != a.rend() && i->index > j->index)) return {true, i->exponent, 0};
    if (i == a.rend() || j->index > i->index) return {true, 0, j->exponent};
    if (i->exponent != j->exponent) return {true, i->exponent, j->exponent};
    ++i;
    ++j;
  }
  return {};
}

std::strong_ordering tie_break(const Monomial& a, const Monomial& b, OrderKind order) {
  switch (order) {
    case OrderKind::PureLex:
    case OrderKind::HomLex: {
      const auto d = last_difference(a.factors(), b.factors());
      return d.found ? d.a <=> d.b : std::strong_ordering::equal;
    }
    case OrderKind::HomAntiLex: {
      const auto d = first_difference(a.factors(), b.factors());
      return d.found ? d.a <=> d.b : std::strong_ordering::equal;
    }
    case OrderKind::HomRevLex: {
      const auto d = first_difference(a.factors(), b.factors());
      return d.found ? d.b <=> d.a : std::strong_ordering::equal;
    }
    case OrderKind::HomAntiRevLex: {
      const auto d = last_difference(a.factors(), b.factors());
      return d.found ? d.b <=> d.a : std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, Degree deg_a, const Monomial& b, Degree deg_b,
                             OrderKind order) {
  if (is_homogeneous(order) && deg_a != deg_b) return deg_a <=> deg_b;
  return tie_break(a, b, order);
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, OrderKind order,
                             const WeightedAlphabet& w) {
  if (!is_homogeneous(order)) return tie_break(a, b, order);
  return compare(a, degree(a, w), b, degree(b, w), order);
}

std::string_view order_name(OrderKind order) noexcept {
  switch (order) {
    case OrderKind::PureLex: return "plex";
    case OrderKind::HomLex: return "hlex";
    case OrderKind::HomAntiLex: return "halex";
    case OrderKind::HomRevLex: return "hrevlex";
    case OrderKind::HomAntiRevLex: return "harevlex";
  }
  return "?";
}

OrderKind parse_order(std::string_view name) {
  for (auto o : kAllOrders)
    if (order_name(o) == name) return o;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) +
                              "' (expected plex, hlex, halex, hrevlex or harevlex)");
}

}  // namespace infinigb
