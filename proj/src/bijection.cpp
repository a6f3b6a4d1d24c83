#include "infinigb/bijection.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "infinigb/division.hpp"
#include "infinigb/errors.hpp"
#include "infinigb/ideal.hpp"

namespace infinigb {

BijectionEngine::BijectionEngine(WpSpec spec, std::uint32_t max_weight)
    : spec_(std::move(spec)),
      max_weight_(max_weight),
      x_(FamilySpec::x(spec_)),
      y_(FamilySpec::y(spec_)) {
  const auto window = TruncationWindow::make(std::max<std::uint32_t>(max_weight, 1),
                                             std::max<std::uint32_t>(max_weight, 1));
  const auto harl = Ring::make(OrderKind::HomAntiRevLex);
  const auto hl = Ring::make(OrderKind::HomLex);
  merge_ = IdealPresentation::binomial_family(harl, spec_.p, spec_.w).instantiate(window);
  split_ = IdealPresentation::binomial_family(hl, spec_.p, spec_.w).instantiate(window);
}

void BijectionEngine::check_weight(const Partition& lambda) const {
  if (lambda.weight() > max_weight_)
    throw std::invalid_argument("partition " + lambda.to_string() + " is heavier than " +
                                std::to_string(max_weight_));
}

Partition BijectionEngine::by_division(const Partition& lambda,
                                       const std::vector<Polynomial>& basis) const {
  const RingPtr& ring = basis.empty() ? Ring::make(OrderKind::HomLex) : basis.front().ring();
  const auto f = Polynomial::monomial(ring, partition_to_monomial(lambda));
  const auto r = remainder(f, basis);
  if (r.size() != 1 || !r.lc().is_one())
    throw std::logic_error("remainder of a monomial by binomials is not a monomial: " +
                           r.to_string());
  return monomial_to_partition(r.lm());
}

Partition BijectionEngine::phi(const Partition& lambda, Route route) const {
  if (!x_.contains(lambda))
    throw NotInFamily(lambda.to_string() + " is not in X (" + spec_.describe() + ")");
  check_weight(lambda);
  if (route == Route::Oracle) return merge_parts(lambda, spec_);
  return by_division(lambda, merge_);
}

Partition BijectionEngine::psi(const Partition& mu, Route route) const {
  if (!y_.contains(mu))
    throw NotInFamily(mu.to_string() + " is not in Y (" + spec_.describe() + ")");
  check_weight(mu);
  if (route == Route::Oracle) return split_parts(mu, spec_);
  return by_division(mu, split_);
}

Partition merge_parts(const Partition& lambda, const WpSpec& spec) {
  std::map<Part, std::uint64_t> mult;
  for (auto k : lambda.parts()) ++mult[k];
  // Merging p copies of i creates parts pi > i, so one ascending sweep that
  // revisits the created parts reaches the fixpoint.
  for (auto it = mult.begin(); it != mult.end(); ++it) {
    const Part i = it->first;
    if (!spec.w.contains(i) || it->second < spec.p) continue;
    const std::uint64_t merged = it->second / spec.p;
    it->second %= spec.p;
    mult[i * spec.p] += merged;
  }
  std::vector<Part> parts;
  for (const auto& [k, m] : mult)
    for (std::uint64_t j = 0; j < m; ++j) parts.push_back(k);
  return Partition::from_unsorted(std::move(parts));
}

Partition split_parts(const Partition& mu, const WpSpec& spec) {
  std::vector<Part> parts;
  for (auto k : mu.parts()) {
    Part v = k;
    std::uint64_t copies = 1;
    while (v % spec.p == 0 && spec.w.contains(v / spec.p)) {
      v /= spec.p;
      copies *= spec.p;
    }
    for (std::uint64_t j = 0; j < copies; ++j) parts.push_back(v);
  }
  return Partition::from_unsorted(std::move(parts));
}

BijectionReport verify_bijection(const WpSpec& spec, std::uint32_t n, Execution execution) {
  BijectionEngine engine(spec, n);
  const auto xs = enumerate(FamilySpec::x(spec), n);
  const auto ys = enumerate(FamilySpec::y(spec), n);
  const auto yfam = FamilySpec::y(spec);
  const auto xfam = FamilySpec::x(spec);

  BijectionReport rep;
  rep.n = n;
  rep.size_x = xs.size();
  rep.size_y = ys.size();
  if (rep.size_x != rep.size_y)
    rep.failures.push_back("|X(n)| = " + std::to_string(rep.size_x) + " but |Y(n)| = " +
                           std::to_string(rep.size_y));

  std::mutex guard;
  auto fail = [&](bool& flag, std::string msg) {
    std::lock_guard lock(guard);
    flag = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };

  std::vector<Partition> images(xs.size());
  for_each_index(xs.size(), execution, [&](std::size_t k) {
    const auto& lambda = xs[k];
    const auto mu = engine.phi(lambda, Route::Division);
    images[k] = mu;
    if (engine.phi(lambda, Route::Oracle) != mu)
      fail(rep.routes_agree, "phi routes disagree at " + lambda.to_string());
    if (!yfam.contains(mu) || mu.weight() != lambda.weight()) {
      fail(rep.phi_into_y, "phi" + lambda.to_string() + " = " + mu.to_string() + " is not in Y");
      return;
    }
    if (engine.psi(mu, Route::Division) != lambda)
      fail(rep.psi_phi_identity, "psi(phi" + lambda.to_string() + ") != " + lambda.to_string());
  });
  for_each_index(ys.size(), execution, [&](std::size_t k) {
    const auto& mu = ys[k];
    const auto lambda = engine.psi(mu, Route::Division);
    if (engine.psi(mu, Route::Oracle) != lambda)
      fail(rep.routes_agree, "psi routes disagree at " + mu.to_string());
    if (!xfam.contains(lambda) || lambda.weight() != mu.weight()) {
      fail(rep.psi_into_x, "psi" + mu.to_string() + " = " + lambda.to_string() + " is not in X");
      return;
    }
    if (engine.phi(lambda, Route::Division) != mu)
      fail(rep.phi_psi_identity, "phi(psi" + mu.to_string() + ") != " + mu.to_string());
  });
  std::set<Partition> seen;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (rep.phi_into_y && !seen.insert(images[k]).second)
      fail(rep.phi_injective, "phi is not injective at " + xs[k].to_string());
    rep.rows.emplace_back(xs[k], images[k]);
  }
  return rep;
}

}  // namespace infinigb
