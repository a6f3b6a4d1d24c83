#pragma once

#include <array>
#include <compare>
#include <string_view>

#include "infinigb/monomial.hpp"

namespace infinigb {

/// The five monomial orders on Mon(S), with variables numbered x_1 < x_2 < ...
///
///  PureLex        a > b iff a_i > b_i at the last index where they differ.
///  HomLex         degree first, then a_i > b_i at the last differing index.
///  HomAntiLex     degree first, then a_i > b_i at the first differing index.
///  HomRevLex      degree first, then a_i < b_i at the first differing index.
///  HomAntiRevLex  degree first, then a_i < b_i at the last differing index.
enum class OrderKind { PureLex, HomLex, HomAntiLex, HomRevLex, HomAntiRevLex };

inline constexpr std::array<OrderKind, 5> kAllOrders = {
    OrderKind::PureLex, OrderKind::HomLex, OrderKind::HomAntiLex, OrderKind::HomRevLex,
    OrderKind::HomAntiRevLex};

inline constexpr std::array<OrderKind, 4> kHomogeneousOrders = {
    OrderKind::HomLex, OrderKind::HomAntiLex, OrderKind::HomRevLex, OrderKind::HomAntiRevLex};

constexpr bool is_homogeneous(OrderKind order) noexcept { return order != OrderKind::PureLex; }

std::strong_ordering compare(const Monomial& a, const Monomial& b, OrderKind order,
                             const WeightedAlphabet& w);

/// Variant of compare() for callers that already know both degrees.
std::strong_ordering compare(const Monomial& a, Degree deg_a, const Monomial& b, Degree deg_b,
                             OrderKind order);

/// CLI names: plex, hlex, halex, hrevlex, harevlex.
std::string_view order_name(OrderKind order) noexcept;

/// Throws std::invalid_argument for an unknown name.
OrderKind parse_order(std::string_view name);

}  // namespace infinigb
