#include <doctest.h>

#include <algorithm>
#include <set>

#include "infinigb/bijection.hpp"
#include "infinigb/errors.hpp"
#include "infinigb/identities.hpp"
#include "infinigb/partition.hpp"
#include "infinigb/random.hpp"
#include "support.hpp"

using namespace infinigb;

namespace {

Partition L(std::vector<Part> parts) { return Partition(std::move(parts)); }

// Brute-force membership straight from the family definitions.
bool in_x(const oracle::Parts& parts, const WpSpec& s) {
  return std::all_of(parts.begin(), parts.end(), [&](Part k) {
    return s.w.contains(k) && !(k % s.p == 0 && s.w.contains(k / s.p));
  });
}

bool in_y(const oracle::Parts& parts, const WpSpec& s) {
  for (Part k : parts)
    if (!s.w.contains(k) || oracle::max_multiplicity(parts) >= s.p) return false;
  return true;
}

std::vector<Partition> brute(std::uint32_t n, const std::function<bool(const oracle::Parts&)>& keep) {
  std::vector<Partition> out;
  for (auto& p : oracle::all_partitions(n))
    if (keep(p)) out.emplace_back(p);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool mod6(Part k) { return k % 6 == 1 || k % 6 == 5; }
bool mod3(Part k) { return k % 3 != 0; }

}  // namespace

TEST_CASE("partition values") {
  CHECK(L({5, 4, 1}).weight() == 10);
  CHECK(L({}).weight() == 0);
  CHECK(L({3, 3, 1}).multiplicity(3) == 2);
  CHECK(L({5, 4, 1}).to_string() == "(5,4,1)");
  CHECK(L({}).to_string() == "()");
  CHECK(Partition::parse(" ( 5, 4 ,1 ) ") == L({5, 4, 1}));
  CHECK(Partition::parse("()") == L({}));
  CHECK(Partition::from_unsorted({1, 5, 4}) == L({5, 4, 1}));
  CHECK_THROWS_AS(L({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(L({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("(5,4"), ParseError);
  CHECK_THROWS_AS(Partition::parse("(1,2)"), ParseError);
  CHECK_THROWS_AS(Partition::parse("(a)"), ParseError);
}

TEST_CASE("wp specs") {
  CHECK_NOTHROW(WpSpec::ab());
  CHECK_NOTHROW(WpSpec::ac());
  CHECK_THROWS_AS(WpSpec::make(VariableSet::odd(), 2), std::invalid_argument);
  CHECK_THROWS_AS(WpSpec::make(VariableSet::all(), 1), std::invalid_argument);
  CHECK_NOTHROW(WpSpec::make(VariableSet::all(), 5));
}

TEST_CASE("named families against brute force") {
  for (std::uint32_t n = 0; n <= 24; ++n) {
    CHECK(enumerate(FamilySpec::a(), n) == brute(n, [](auto& p) {
            return std::all_of(p.begin(), p.end(), mod6);
          }));
    CHECK(enumerate(FamilySpec::b(), n) == brute(n, [](auto& p) {
            return oracle::max_multiplicity(p) <= 1 && std::all_of(p.begin(), p.end(), mod3);
          }));
    CHECK(enumerate(FamilySpec::c(), n) == brute(n, [](auto& p) {
            return oracle::max_multiplicity(p) <= 2 &&
                   std::all_of(p.begin(), p.end(), [](Part k) { return k % 2 == 1; });
          }));
    CHECK(enumerate(FamilySpec::p(), n) == brute(n, [](auto& p) {
            return std::all_of(p.begin(), p.end(), [](Part k) { return k % 5 == 1 || k % 5 == 4; });
          }));
    CHECK(enumerate(FamilySpec::q(), n) == brute(n, [](auto& p) {
            for (std::size_t j = 1; j < p.size(); ++j)
              if (p[j - 1] - p[j] < 2) return false;
            return true;
          }));
    for (auto name : {"A", "B", "C", "P", "Q"}) {
      const auto f = FamilySpec::named(name);
      CHECK(count(f, n) == enumerate(f, n).size());
      for (auto& lambda : enumerate(f, n)) CHECK(f.contains(lambda));
    }
  }
  CHECK_THROWS_AS(FamilySpec::named("Z"), std::invalid_argument);
}

TEST_CASE("small tables") {
  CHECK(enumerate(FamilySpec::a(), 10) ==
        std::vector<Partition>{L({7, 1, 1, 1}), L({5, 5}), L({5, 1, 1, 1, 1, 1}),
                               L({1, 1, 1, 1, 1, 1, 1, 1, 1, 1})});
  CHECK(count(FamilySpec::c(), 10) == 4);
  CHECK(count(FamilySpec::b(), 0) == 1);
  CHECK(count(FamilySpec::b(), 10) == 4);
  CHECK(count_table(FamilySpec::a(), 30) == count_table(FamilySpec::a(), 30, Execution::Parallel));
}

TEST_CASE("preset families coincide") {
  const auto ab = WpSpec::ab();
  const auto ac = WpSpec::ac();
  for (std::uint32_t n = 0; n <= 30; ++n) {
    CHECK(enumerate(FamilySpec::x(ab), n) == enumerate(FamilySpec::a(), n));
    CHECK(enumerate(FamilySpec::x(ac), n) == enumerate(FamilySpec::a(), n));
    CHECK(enumerate(FamilySpec::y(ab), n) == enumerate(FamilySpec::b(), n));
    CHECK(enumerate(FamilySpec::y(ac), n) == enumerate(FamilySpec::c(), n));
  }
}

TEST_CASE("partition dictionary") {
  for (std::uint32_t n = 0; n <= 30; ++n)
    for (auto& parts : oracle::all_partitions(n)) {
      const Partition lambda(parts);
      const auto m = partition_to_monomial(lambda);
      CHECK(degree(m, WeightedAlphabet::standard()) == n);
      CHECK(monomial_to_partition(m) == lambda);
    }
  CHECK(to_string(partition_to_monomial(L({5, 4, 1}))) == "x1*x4*x5");
  CHECK(partition_to_monomial(L({})).is_one());
}

TEST_CASE("phi and psi on the worked examples") {
  const BijectionEngine ab(WpSpec::ab(), 20);
  CHECK(ab.phi(L({7, 1, 1, 1})) == L({7, 2, 1}));
  CHECK(ab.phi(L({5, 5})) == L({10}));
  CHECK(ab.phi(L({5, 1, 1, 1, 1, 1})) == L({5, 4, 1}));
  CHECK(ab.phi(L({1, 1, 1, 1, 1, 1, 1, 1, 1, 1})) == L({8, 2}));
  CHECK(ab.psi(L({8, 2})) == L({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(ab.psi(L({10})) == L({5, 5}));
  CHECK(ab.phi(L({})) == L({}));
  CHECK_THROWS_AS(ab.phi(L({2})), NotInFamily);
  CHECK_THROWS_AS(ab.psi(L({4, 4})), NotInFamily);
  CHECK_THROWS_AS(ab.phi(L({25})), std::invalid_argument);

  const BijectionEngine ac(WpSpec::ac(), 12);
  CHECK(ac.phi(L({1, 1, 1})) == L({3}));
  CHECK(ac.phi(L({1, 1, 1, 1, 1, 1, 1, 1, 1})) == L({9}));
  CHECK(ac.psi(L({9, 1})) == L({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(ac.phi(L({5, 5, 5, 1})), std::invalid_argument);
  CHECK(BijectionEngine(WpSpec::ac(), 16).phi(L({5, 5, 5, 1})) == L({15, 1}));
}

TEST_CASE("phi and psi properties") {
  for (const auto& spec : {WpSpec::ab(), WpSpec::ac()}) {
    const std::uint32_t N = 24;
    const BijectionEngine e(spec, N);
    const auto X = FamilySpec::x(spec), Y = FamilySpec::y(spec);
    for (std::uint32_t n = 0; n <= N; ++n) {
      const auto xs = enumerate(X, n);
      const auto ys = enumerate(Y, n);
      CHECK(xs.size() == ys.size());
      std::set<Partition> image;
      for (auto& lambda : xs) {
        const auto mu = e.phi(lambda);
        CHECK(Y.contains(mu));
        CHECK(mu.weight() == n);
        CHECK(mu == e.phi(lambda, Route::Oracle));
        CHECK(e.psi(mu) == lambda);
        image.insert(mu);
      }
      CHECK(image.size() == xs.size());
      for (auto& mu : ys) {
        CHECK(X.contains(e.psi(mu)));
        CHECK(e.psi(mu) == e.psi(mu, Route::Oracle));
        CHECK(e.phi(e.psi(mu)) == mu);
      }
    }
  }
}

TEST_CASE("verify_bijection up to weight 40") {
  for (const auto& spec : {WpSpec::ab(), WpSpec::ac()}) {
    const auto report = verify_bijection(spec, 40, Execution::Parallel);
    CHECK(report.passed());
    CHECK(report.failures.empty());
    CHECK(report.rows.size() == report.size_x);
  }
  const auto zero = verify_bijection(WpSpec::ab(), 0);
  REQUIRE(zero.rows.size() == 1);
  CHECK(zero.rows[0].first == L({}));
  CHECK(zero.rows[0].second == L({}));
}

TEST_CASE("random (W, p) specs") {
  Rng rng(20261016);
  for (int trial = 0; trial < 3; ++trial) {
    const auto spec = random_wp_spec(rng);
    CAPTURE(spec.describe());
    for (std::uint32_t n = 0; n <= 30; ++n) {
      const auto xs = enumerate(FamilySpec::x(spec), n);
      CHECK(xs == brute(n, [&](auto& p) { return in_x(p, spec); }));
      CHECK(enumerate(FamilySpec::y(spec), n) == brute(n, [&](auto& p) { return in_y(p, spec); }));
      CHECK(xs.size() == count(FamilySpec::y(spec), n));
    }
    CHECK(verify_bijection(spec, 18).passed());
    CHECK(xy_identity_check(spec, 30).passed());
  }
}

TEST_CASE("identities") {
  const auto schur = schur_identity_check(40);
  CHECK(schur.passed());
  CHECK(schur.truncation == 40);
  for (auto& col : schur.values) CHECK(col == schur.values[0]);
  const auto rr = rr_identity_check(40);
  CHECK(rr.passed());
  for (auto& col : rr.values) CHECK(col == rr.values[0]);

  // Independent: Euler's odd = distinct parts via brute force.
  const auto odd = unrestricted_product([](Part k) { return k % 2 == 1; }, 20);
  const auto distinct = bounded_product([](Part) { return true; }, 2, 20);
  CHECK(odd == distinct);
  for (std::uint32_t n = 0; n <= 20; ++n)
    CHECK(distinct[n] == static_cast<std::int64_t>(oracle::count_if_partitions(
                             n, [](auto& p) { return oracle::max_multiplicity(p) <= 1; })));
  // Rogers-Ramanujan sum side: 1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6
  CHECK(rogers_ramanujan_sum(10).coefficients() ==
        std::vector<TruncatedSeries::Coeff>{1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6});
}
