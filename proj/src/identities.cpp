#include "infinigb/identities.hpp"

#include "infinigb/groebner.hpp"
#include "infinigb/hilbert.hpp"
#include "infinigb/ideal.hpp"

namespace infinigb {

TruncatedSeries unrestricted_product(const std::function<bool(Part)>& admit, std::size_t n) {
  auto s = TruncatedSeries::one(n);
  for (std::size_t m = 1; m <= n; ++m)
    if (admit(static_cast<Part>(m))) s.div_one_minus_power(m);
  return s;
}

TruncatedSeries bounded_product(const std::function<bool(Part)>& admit, std::size_t count,
                                std::size_t n) {
  auto s = TruncatedSeries::one(n);
  for (std::size_t m = 1; m <= n; ++m)
    if (admit(static_cast<Part>(m))) s = s * TruncatedSeries::partial_geometric(m, count, n);
  return s;
}

TruncatedSeries rogers_ramanujan_sum(std::size_t n) {
  auto total = TruncatedSeries::one(n);
  for (std::size_t m = 1; m * m <= n; ++m) {
    std::vector<TruncatedSeries::Coeff> c(n + 1, 0);
    c[m * m] = 1;
    TruncatedSeries term(std::move(c));
    for (std::size_t j = 1; j <= m; ++j) term.div_one_minus_power(j);
    total = total + term;
  }
  return total;
}

namespace {

std::vector<std::int64_t> as_signed(const std::vector<std::uint64_t>& v) {
  return {v.begin(), v.end()};
}

void compare_columns(IdentityReport& rep) {
  const auto& ref = rep.values.front();
  for (std::size_t c = 1; c < rep.columns.size(); ++c)
    for (std::size_t k = 0; k <= rep.truncation; ++k)
      if (rep.values[c][k] != ref[k]) {
        rep.failures.push_back(rep.columns[c] + " differs from " + rep.columns[0] + " at n = " +
                               std::to_string(k) + " (" + std::to_string(rep.values[c][k]) +
                               " vs " + std::to_string(ref[k]) + ")");
        break;
      }
}

std::vector<std::int64_t> family_hilbert(const WpSpec& spec, std::size_t n, Execution execution) {
  const auto ring = Ring::make(OrderKind::HomAntiRevLex);
  const auto ideal = IdealPresentation::binomial_family(ring, spec.p, spec.w);
  const auto window = TruncationWindow::make(static_cast<VarIndex>(std::max<std::size_t>(n, 1)),
                                             std::max<std::size_t>(n, 1));
  const auto gens = ideal.instantiate(window);
  const auto basis = gens.empty() ? GroebnerBasis(ring, {}, window, Certificate::BayerStillman, true)
                                  : *bayer_stillman_basis(gens, window);
  return quotient_series_from_standard_monomials(basis, spec.w, n, execution).coefficients();
}

}  // namespace

IdentityReport schur_identity_check(std::size_t n, Execution execution) {
  IdentityReport rep;
  rep.name = "schur";
  rep.truncation = n;
  auto add = [&](std::string name, std::vector<std::int64_t> v) {
    rep.columns.push_back(std::move(name));
    rep.values.push_back(std::move(v));
  };
  const auto N = static_cast<std::uint32_t>(n);
  add("prod_pm1_mod6",
      unrestricted_product([](Part m) { return m % 6 == 1 || m % 6 == 5; }, n).coefficients());
  add("prod_distinct_pm1_mod3",
      bounded_product([](Part m) { return m % 3 != 0; }, 2, n).coefficients());
  add("prod_odd_mult2", bounded_product([](Part m) { return m % 2 == 1; }, 3, n).coefficients());
  add("count_A", as_signed(count_table(FamilySpec::a(), N, execution)));
  add("count_B", as_signed(count_table(FamilySpec::b(), N, execution)));
  add("count_C", as_signed(count_table(FamilySpec::c(), N, execution)));
  add("hilbert_p2", family_hilbert(WpSpec::ab(), n, execution));
  add("hilbert_p3", family_hilbert(WpSpec::ac(), n, execution));
  compare_columns(rep);
  return rep;
}

IdentityReport rr_identity_check(std::size_t n, Execution execution) {
  IdentityReport rep;
  rep.name = "rogers-ramanujan";
  rep.truncation = n;
  const auto N = static_cast<std::uint32_t>(n);
  rep.columns = {"prod_pm1_mod5", "sum_side", "count_P", "count_Q"};
  rep.values.push_back(
      unrestricted_product([](Part m) { return m % 5 == 1 || m % 5 == 4; }, n).coefficients());
  rep.values.push_back(rogers_ramanujan_sum(n).coefficients());
  rep.values.push_back(as_signed(count_table(FamilySpec::p(), N, execution)));
  rep.values.push_back(as_signed(count_table(FamilySpec::q(), N, execution)));
  compare_columns(rep);
  return rep;
}

IdentityReport xy_identity_check(const WpSpec& spec, std::size_t n, Execution execution) {
  IdentityReport rep;
  rep.name = "xy";
  rep.truncation = n;
  const auto N = static_cast<std::uint32_t>(n);
  const auto x = FamilySpec::x(spec);
  rep.columns = {"prod_X", "prod_Y", "count_X", "count_Y", "hilbert"};
  rep.values.push_back(
      unrestricted_product([&](Part m) { return x.admits_part(m); }, n).coefficients());
  rep.values.push_back(
      bounded_product([&](Part m) { return spec.w.contains(m); }, spec.p, n).coefficients());
  rep.values.push_back(as_signed(count_table(x, N, execution)));
  rep.values.push_back(as_signed(count_table(FamilySpec::y(spec), N, execution)));
  rep.values.push_back(family_hilbert(spec, n, execution));
  compare_columns(rep);
  return rep;
}

}  // namespace infinigb
