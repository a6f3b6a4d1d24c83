// One line per acceptance criterion: PASS/FAIL, elapsed time and its budget.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "infinigb/bijection.hpp"
#include "infinigb/division.hpp"
#include "infinigb/groebner.hpp"
#include "infinigb/hilbert.hpp"
#include "infinigb/identities.hpp"
#include "infinigb/ideal.hpp"
#include "infinigb/partition.hpp"
#include "infinigb/random.hpp"
#include "infinigb/regular.hpp"
#include "../unit/support.hpp"

using namespace infinigb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failing observation and keeps going.
struct Tally {
  bool ok = true;
  std::string first_failure;
  std::size_t checks = 0;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
  Outcome outcome(const std::string& summary) const {
    return {ok, ok ? summary : summary + "; first failure: " + first_failure};
  }
};

bool report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = o.ok && s < budget_s;
  std::printf("[%s] %d %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), s, budget_s);
  std::fflush(stdout);
  return pass;
}

std::vector<std::int64_t> sizes(const FamilySpec& f, std::uint32_t n) {
  std::vector<std::int64_t> out;
  for (std::uint32_t k = 0; k <= n; ++k) out.push_back(static_cast<std::int64_t>(enumerate(f, k).size()));
  return out;
}

Outcome order_table() {
  // Each chain lists the five monomials from largest to smallest.
  const std::vector<std::pair<OrderKind, std::vector<const char*>>> chains = {
      {OrderKind::HomLex, {"x4", "x1*x3", "x2^2", "x1^2*x2", "x1^4"}},
      {OrderKind::HomAntiLex, {"x1^4", "x1^2*x2", "x1*x3", "x2^2", "x4"}},
      {OrderKind::HomRevLex, {"x4", "x2^2", "x1*x3", "x1^2*x2", "x1^4"}},
      {OrderKind::HomAntiRevLex, {"x1^4", "x1^2*x2", "x2^2", "x1*x3", "x4"}},
  };
  const auto w = WeightedAlphabet::standard();
  Tally t;
  for (const auto& [order, chain] : chains)
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j)
        t.expect(compare(parse_monomial(chain[i]), parse_monomial(chain[j]), order, w) > 0,
                 std::string(order_name(order)) + ": " + chain[i] + " > " + chain[j]);
  return t.outcome(std::to_string(t.checks) + " comparisons over 4 chains");
}

Outcome schur() {
  const std::uint32_t N = 60;
  const auto a = sizes(FamilySpec::a(), N), b = sizes(FamilySpec::b(), N), c = sizes(FamilySpec::c(), N);
  const auto s1 = unrestricted_product([](Part m) { return m % 6 == 1 || m % 6 == 5; }, N);
  const auto s2 = bounded_product([](Part m) { return m % 3 != 0; }, 2, N);
  const auto s3 = bounded_product([](Part m) { return m % 2 == 1; }, 3, N);
  Tally t;
  for (std::uint32_t n = 0; n <= N; ++n) {
    const auto tag = "n=" + std::to_string(n);
    t.expect(a[n] == b[n] && b[n] == c[n], "|A|,|B|,|C| at " + tag);
    t.expect(s1[n] == a[n] && s2[n] == a[n] && s3[n] == a[n], "series at " + tag);
  }
  return t.outcome("|A(n)|=|B(n)|=|C(n)|=[t^n] of 3 products, n<=60, |A(60)|=" + std::to_string(a[N]));
}

Outcome bijections() {
  Tally t;
  std::size_t elements = 0;
  for (const auto& [name, spec] : {std::pair{"A<->B", WpSpec::ab()}, std::pair{"A<->C", WpSpec::ac()}})
    for (std::uint32_t n = 0; n <= 40; ++n) {
      const auto r = verify_bijection(spec, n, Execution::Parallel);
      elements += r.size_x + r.size_y;
      t.expect(r.passed() && r.failures.empty(), std::string(name) + " n=" + std::to_string(n));
    }
  return t.outcome("both presets, n<=40, " + std::to_string(elements) +
                   " elements checked by division and oracle");
}

Outcome family_certification() {
  Tally t;
  std::size_t pairs = 0;
  for (auto [p, w] : {std::pair{2u, VariableSet::pm_mod(1, 3)}, std::pair{3u, VariableSet::odd()}})
    for (auto order : {OrderKind::HomAntiRevLex, OrderKind::HomLex})
      for (VarIndex n = 1; n <= 12; ++n) {
        const auto ring = Ring::make(order);
        const auto window = TruncationWindow::make(n, 30);
        const auto gens = IdealPresentation::binomial_family(ring, p, w).instantiate(window);
        const auto tag = std::string(order_name(order)) + " p=" + std::to_string(p) +
                         " n=" + std::to_string(n);
        // Below the first generator the ideal is zero and there is nothing to certify.
        if (!gens.empty()) t.expect(bayer_stillman_basis(gens, window).has_value(), "coprime fast path " + tag);
        const auto full = verify_buchberger(gens, window, Execution::Parallel);
        pairs += full.pairs_checked;
        t.expect(full.passed, "windowed Buchberger " + tag);
        if (order == OrderKind::HomAntiRevLex) t.expect(is_reduced_set(gens), "reduced " + tag);
      }
  return t.outcome("2 presets x {harevlex, hlex} x n<=12, D=30, " + std::to_string(pairs) +
                   " S-pairs reduced to 0, harevlex bases reduced");
}

Outcome uniqueness() {
  Rng rng(5);
  Tally t;
  std::size_t complete = 0, elements = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto ring = Ring::make(random_order(rng, false));
    const bool hom = is_homogeneous(ring->order());
    auto gens = random_generators(rng, ring, {4, 6, 3, 3, hom}, 3);
    // A degree bound far above anything these inputs reach; a run that never
    // discards a pair is an ordinary (untruncated) Buchberger completion.
    const auto window = TruncationWindow::make(4, 60);
    BuchbergerStats stats;
    const auto reference = reduce_basis(buchberger_truncated(gens, ring, window, {}, &stats));
    complete += stats.discarded_over_degree == 0;
    elements += reference.elements().size();
    const auto tag = "ideal " + std::to_string(trial);
    t.expect(is_reduced_set(reference.elements()), tag + " reduced");
    for (int s = 0; s < 10; ++s) {
      std::shuffle(gens.begin(), gens.end(), rng);
      t.expect(reduce_basis(buchberger_truncated(gens, ring, window)).elements() == reference.elements(),
               tag + " shuffle " + std::to_string(s));
    }
  }
  return t.outcome("20 ideals in S<4> x 10 shuffles, " + std::to_string(elements) +
                   " reduced basis elements in total, " + std::to_string(complete) +
                   "/20 completed below the degree bound");
}

Outcome hilbert_routes() {
  const std::size_t N = 40;
  Tally t;
  const auto ring = Ring::make(OrderKind::HomAntiRevLex);
  for (auto [p, w] : {std::pair{2u, VariableSet::pm_mod(1, 3)}, std::pair{3u, VariableSet::odd()}}) {
    const auto ideal = IdealPresentation::binomial_family(ring, p, w);
    const auto window = TruncationWindow::make(N, N);
    const auto gens = ideal.instantiate(window);
    const auto basis = bayer_stillman_basis(gens, window);
    t.expect(basis.has_value(), "basis p=" + std::to_string(p));
    if (basis)
      t.expect(quotient_series_from_standard_monomials(*basis, w, N, Execution::Parallel) ==
                   regular_sequence_series(ideal, N),
               "two routes p=" + std::to_string(p));
  }
  const auto ambient = ambient_series(WeightedAlphabet::standard(), VariableSet::all(), N);
  for (std::uint32_t n = 0; n <= N; ++n)
    t.expect(ambient[n] == static_cast<std::int64_t>(oracle::all_partitions(n).size()),
             "p(" + std::to_string(n) + ")");
  return t.outcome("both presets to T^40, ambient p(40)=" + std::to_string(ambient[N]));
}

Outcome division_contracts() {
  Rng rng(7);
  Tally t;
  for (int trial = 0; trial < 500; ++trial) {
    const auto ring = Ring::make(random_order(rng, false));
    const RandomPolynomialShape shape{4, 6, 4, 3, false};
    const auto f = random_polynomial(rng, ring, shape);
    const auto gs = random_generators(rng, ring, shape, 4);
    const auto res = divide(f, gs);
    const auto tag = "instance " + std::to_string(trial);
    Polynomial sum = res.remainder;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const auto prod = res.quotients[i] * gs[i];
      if (!prod.is_zero()) t.expect(ring->compare(prod.lm(), f.lm()) <= 0, tag + " lm bound");
      sum += prod;
    }
    t.expect(sum == f, tag + " reconstruction");
    for (const auto& term : res.remainder.terms())
      for (const auto& g : gs) t.expect(!divides(g.lm(), term.monomial), tag + " remainder support");
  }
  return t.outcome("500 random (f, G)");
}

Outcome rogers_ramanujan() {
  const std::uint32_t N = 50;
  const auto p = sizes(FamilySpec::p(), N), q = sizes(FamilySpec::q(), N);
  const auto product = unrestricted_product([](Part m) { return m % 5 == 1 || m % 5 == 4; }, N);
  const auto sum = rogers_ramanujan_sum(N);
  Tally t;
  for (std::uint32_t n = 0; n <= N; ++n)
    t.expect(p[n] == q[n] && product[n] == p[n] && sum[n] == p[n], "n=" + std::to_string(n));
  return t.outcome("|P(n)|=|Q(n)|=both sides, n<=50, |P(50)|=" + std::to_string(p[N]));
}

Outcome fr_invariance() {
  const Degree D = 12;
  const auto ring = Ring::make(OrderKind::HomRevLex);
  const RandomPolynomialShape shape{5, 3, 4, 3, true};
  Rng rng(9);
  Tally t;
  auto every_order = [&](std::vector<Polynomial> seq, bool want, const std::string& tag) {
    std::vector<std::size_t> idx(seq.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::size_t perms = 0;
    do {
      RegularSequenceCandidate c;
      for (auto i : idx) c.elements.push_back(seq[i]);
      c.variables = VariableSet::range(5);
      c.var_bound = 5;
      t.expect(check_fr_condition(c, D) == want, tag + " permutation " + std::to_string(perms));
      ++perms;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return perms;
  };

  std::size_t perms = 0;
  int regular = 0;
  while (regular < 10) {
    const auto length = 2 + rng() % 3;
    std::vector<Polynomial> seq;
    for (std::size_t k = 0; k < length; ++k) seq.push_back(random_polynomial(rng, ring, shape));
    RegularSequenceCandidate c{seq, VariableSet::range(5), 5};
    if (!is_regular_sequence(c, D)) continue;  // sampling keeps the regular ones
    perms += every_order(seq, true, "regular " + std::to_string(regular++));
  }

  auto poly = [&] { return random_polynomial(rng, ring, {5, 2, 3, 3, true}); };
  for (int k = 0; k < 10; ++k) {
    const auto f = poly(), a = poly(), b = poly();
    std::vector<Polynomial> seq;
    switch (k % 3) {
      case 0: seq = {f * a, f * b}; break;       // shared factor
      case 1: seq = {f, f * a}; break;           // second element in the first's ideal
      default: seq = {f, f}; break;              // repeated element
    }
    if (k >= 6) seq.push_back(poly());           // a longer tail does not help
    perms += every_order(seq, false, "non-regular " + std::to_string(k));
  }
  return t.outcome("10 regular + 10 non-regular sequences in S<5>, " + std::to_string(perms) +
                   " orderings, probe degree " + std::to_string(D));
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "order table reproduction", 1, order_table);
  all &= report(2, "Schur equalities", 60, schur);
  all &= report(3, "bijection soundness", 120, bijections);
  all &= report(4, "Groebner certification of the binomial family", 60, family_certification);
  all &= report(5, "reduced basis uniqueness", 120, uniqueness);
  all &= report(6, "Hilbert two-route equality", 30, hilbert_routes);
  all &= report(7, "division contracts", 60, division_contracts);
  all &= report(8, "Rogers-Ramanujan", 60, rogers_ramanujan);
  all &= report(9, "FR-condition permutation invariance", 120, fr_invariance);
  return all ? 0 : 1;
}
