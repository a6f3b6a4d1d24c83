#include "infinigb/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "infinigb/division.hpp"
#include "infinigb/errors.hpp"

namespace infinigb {

namespace {

struct SPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  Degree degree;
};

// Normal strategy: lowest lcm degree first, then lcm under the ambient
// order, then creation order.
struct PairLess {
  const Ring* ring;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto c = compare(a.lcm, a.degree, b.lcm, b.degree, ring->order());
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }
};

class Completion {
 public:
  Completion(const RingPtr& ring, const BuchbergerOptions& options, BuchbergerStats& stats)
      : ring_(ring), options_(options), stats_(stats), pairs_(PairLess{ring.get()}) {}

  void add(Polynomial h) {
    h = h.monic();
    const std::size_t k = basis_.size();
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lcm(basis_[i].lm(), h.lm());
      const Degree d = ring_->degree(l);
      pairs_.insert(SPair{i, k, std::move(l), d});
      ++stats_.pairs_created;
    }
    basis_.push_back(std::move(h));
  }

  void run(Degree degree_bound) {
    while (!pairs_.empty()) {
      if (pairs_.begin()->degree > degree_bound) {
        stats_.discarded_over_degree += pairs_.size();
        pairs_.clear();
        break;
      }
      const Degree current = pairs_.begin()->degree;
      std::vector<std::pair<std::size_t, std::size_t>> batch;
      while (!pairs_.empty() && pairs_.begin()->degree == current) {
        const SPair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        if (options_.coprime_skip && coprime(basis_[p.i].lm(), basis_[p.j].lm())) {
          ++stats_.coprime_skipped;
        } else {
          batch.emplace_back(p.i, p.j);
        }
        if (options_.execution == Execution::Serial) break;
      }
      if (batch.empty()) continue;
      ++stats_.batches;
      stats_.reductions += batch.size();
      // Every reduction in the batch sees the same basis snapshot.
      auto reduced = reduce_s_pairs(basis_, batch, options_.execution);
      for (auto& r : reduced) {
        if (!r.is_zero() && batch.size() > 1) r = remainder(r, basis_);
        if (r.is_zero()) {
          ++stats_.zero_reductions;
          continue;
        }
        add(std::move(r));
      }
    }
  }

  std::vector<Polynomial>& basis() { return basis_; }

 private:
  RingPtr ring_;
  BuchbergerOptions options_;
  BuchbergerStats& stats_;
  std::vector<Polynomial> basis_;
  std::multiset<SPair, PairLess> pairs_;
};

}  // namespace

GroebnerBasis buchberger_truncated(std::span<const Polynomial> gens, const RingPtr& ring,
                                   TruncationWindow window, const BuchbergerOptions& options,
                                   BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  Completion completion(ring, options, st);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!window.admits(g))
      throw WindowViolation("generator " + g.to_string() + " lies outside the window (n=" +
                            std::to_string(window.var_bound) + ", D=" +
                            std::to_string(window.degree_bound) + ")");
    Polynomial h = same_ring(g.ring(), ring) ? g : g.in_ring(ring);
    h = remainder(h, completion.basis());
    if (!h.is_zero()) completion.add(std::move(h));
  }
  completion.run(window.degree_bound);
  auto elements = std::move(completion.basis());
  const bool reduced = is_reduced_set(elements);
  GroebnerBasis gb(ring, std::move(elements), window, Certificate::BuchbergerVerified, reduced);
  gb.set_discarded_pairs(st.discarded_over_degree);
  return gb;
}

CriterionReport verify_buchberger(std::span<const Polynomial> elements, TruncationWindow window,
                                  Execution execution) {
  CriterionReport report;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < elements.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const auto& ring = elements[i].ring();
      if (ring->degree(lcm(elements[i].lm(), elements[j].lm())) > window.degree_bound)
        ++report.pairs_beyond_window;
      else
        pairs.emplace_back(i, j);
    }
  const auto reduced = reduce_s_pairs(elements, pairs, execution);
  report.pairs_checked = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!reduced[k].is_zero()) report.failures.push_back(pairs[k]);
  report.passed = report.failures.empty();
  return report;
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  const auto& all = basis.elements();  // canonical: leading monomial ascending
  std::vector<Polynomial> minimal;
  for (const auto& g : all) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return divides(h.lm(), g.lm());
    });
    if (!redundant) minimal.push_back(g);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    const auto& g = minimal[k];
    Polynomial r = Polynomial::term(g.ring(), g.lc(), g.lm()) + remainder(g.tail(), others);
    reduced.push_back(r.monic());
  }
  GroebnerBasis out(basis.ring(), std::move(reduced), basis.window(), basis.certificate(), true);
  out.set_discarded_pairs(basis.discarded_pairs());
  out.set_verified_windows(basis.verified_windows());
  return out;
}

std::optional<GroebnerBasis> bayer_stillman_basis(std::span<const Polynomial> gens,
                                                 std::optional<TruncationWindow> window) {
  if (gens.empty()) return std::nullopt;
  for (const auto& g : gens)
    if (g.is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!coprime(gens[i].lm(), gens[j].lm())) return std::nullopt;
  VarIndex n = 1;
  Degree d = 1;
  for (const auto& g : gens) {
    n = std::max(n, g.max_variable_index());
    d = std::max(d, g.degree());
  }
  if (window) {
    n = std::max(n, window->var_bound);
    d = std::max(d, window->degree_bound);
  }
  std::vector<Polynomial> elements(gens.begin(), gens.end());
  const bool reduced = is_reduced_set(elements);
  return GroebnerBasis(gens.front().ring(), std::move(elements), TruncationWindow::make(n, d),
                       Certificate::BayerStillman, reduced);
}

std::vector<Polynomial> restrict_to(std::span<const Polynomial> elements, VarIndex n) {
  std::vector<Polynomial> out;
  for (const auto& g : elements)
    if (g.max_variable_index() <= n) out.push_back(g);
  return out;
}

bool purelex_restriction_check(const GroebnerBasis& basis, VarIndex n) {
  if (basis.order() != OrderKind::PureLex)
    throw WrongOrder("restriction check applies to the pure lexicographic order only");
  if (!basis.is_certified()) throw UncertifiedBasis("restriction check needs a certified basis");
  for (const auto& g : basis.elements())
    if (g.lm().max_index() <= n && g.max_variable_index() > n) return false;
  const auto restricted = restrict_to(basis.elements(), n);
  const auto window = TruncationWindow::make(std::max<VarIndex>(n, 1), basis.window().degree_bound);
  return verify_buchberger(restricted, window).passed;
}

bool same_monomial_ideal(std::span<const Monomial> a, std::span<const Monomial> b) {
  auto covered = [](std::span<const Monomial> xs, std::span<const Monomial> by) {
    return std::all_of(xs.begin(), xs.end(), [&](const Monomial& m) {
      return std::any_of(by.begin(), by.end(), [&](const Monomial& d) { return divides(d, m); });
    });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace infinigb
