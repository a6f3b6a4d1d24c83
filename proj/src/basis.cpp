#include "infinigb/basis.hpp"

#include <stdexcept>

#include "infinigb/errors.hpp"

namespace infinigb {

TruncationWindow TruncationWindow::make(VarIndex n, Degree d) {
  if (n < 1 || d < 1) throw std::invalid_argument("truncation window needs n >= 1 and D >= 1");
  return {n, d};
}

std::string_view certificate_name(Certificate c) noexcept {
  switch (c) {
    case Certificate::BuchbergerVerified: return "BuchbergerVerified";
    case Certificate::BayerStillman: return "BayerStillman";
    case Certificate::Asserted: return "Asserted";
  }
  return "?";
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements,
                             TruncationWindow window, Certificate certificate, bool reduced)
    : ring_(std::move(ring)),
      elements_(std::move(elements)),
      window_(window),
      certificate_(certificate),
      reduced_(reduced) {
  for (const auto& g : elements_) {
    if (g.is_zero()) throw ZeroPolynomial("a Groebner basis cannot contain 0");
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("basis element from another ring");
  }
  sort_canonical(elements_);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.lm());
  return out;
}

bool is_reduced_set(std::span<const Polynomial> elements) {
  for (const auto& g : elements)
    if (g.is_zero() || !g.lc().is_one()) return false;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      const auto& lm = elements[i].lm();
      for (const auto& t : elements[j].terms())
        if (divides(lm, t.monomial)) return false;
    }
  return true;
}

}  // namespace infinigb
