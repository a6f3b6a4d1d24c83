#include "infinigb/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "infinigb/division.hpp"
#include "infinigb/errors.hpp"

namespace infinigb {

struct FamilyTemplate::Node {
  char op = '#';  // '#' constant, 'i', 'p', '+', '-', '*'
  std::int64_t value = 0;
  std::vector<Node> kids;

  std::int64_t eval(std::int64_t i, std::int64_t p) const {
    switch (op) {
      case '#': return value;
      case 'i': return i;
      case 'p': return p;
      default: break;
    }
    const std::int64_t a = kids[0].eval(i, p);
    const std::int64_t b = kids[1].eval(i, p);
    std::int64_t r = 0;
    bool overflow = false;
    if (op == '+') overflow = __builtin_add_overflow(a, b, &r);
    else if (op == '-') overflow = __builtin_sub_overflow(a, b, &r);
    else overflow = __builtin_mul_overflow(a, b, &r);
    if (overflow) throw std::overflow_error("template expression overflows");
    return r;
  }
};

struct FamilyTemplate::TermTemplate {
  mpq_class coeff = 1;
  std::vector<std::pair<Node, Node>> factors;  // (index, exponent)
};

namespace {

using Node = FamilyTemplate::Node;
using TermTemplate = FamilyTemplate::TermTemplate;

class TemplateScanner {
 public:
  explicit TemplateScanner(std::string_view text) : text_(text) {}

  std::vector<TermTemplate> parse() {
    std::vector<TermTemplate> terms;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty template", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    skip_ws();
    while (pos_ < text_.size()) {
      if (peek() != '+' && peek() != '-')
        throw ParseError("expected '+' or '-' between terms", pos_);
      negative = peek() == '-';
      ++pos_;
      terms.push_back(term(negative));
      skip_ws();
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, peek() - '0', &v))
        throw ParseError("number too large", start);
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a number", pos_);
    return v;
  }

  // expr := product (('+'|'-') product)*
  Node expr() {
    Node left = product();
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') return left;
      const char op = peek();
      ++pos_;
      Node n{op, 0, {std::move(left), product()}};
      left = std::move(n);
    }
  }

  Node product() {
    Node left = atom();
    for (;;) {
      skip_ws();
      if (peek() != '*') return left;
      ++pos_;
      Node n{'*', 0, {std::move(left), atom()}};
      left = std::move(n);
    }
  }

  Node atom() {
    skip_ws();
    const char c = peek();
    if (c == 'i' || c == 'p') {
      ++pos_;
      return Node{c, 0, {}};
    }
    if (c == '(') {
      ++pos_;
      Node inner = expr();
      expect(')');
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return Node{'-', 0, {Node{'#', 0, {}}, atom()}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Node{'#', number(), {}};
    throw ParseError("expected a number, 'i', 'p' or '('", pos_);
  }

  // index := digits | '{' expr '}'
  Node index() {
    if (peek() == '{') {
      ++pos_;
      Node n = expr();
      expect('}');
      return n;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a variable index or '{expr}'", pos_);
    return Node{'#', number(), {}};
  }

  // exponent := digits | 'i' | 'p' | '{' expr '}'
  Node exponent() {
    skip_ws();
    const char c = peek();
    if (c == 'i' || c == 'p') {
      ++pos_;
      return Node{c, 0, {}};
    }
    return index();
  }

  std::pair<Node, Node> factor() {
    skip_ws();
    if (peek() != 'x') throw ParseError("expected a variable", pos_);
    ++pos_;
    std::optional<Node> exp;
    if (peek() == '^') {
      ++pos_;
      exp = exponent();
    }
    Node idx = index();
    skip_ws();
    if (peek() == '^') {
      if (exp) throw ParseError("exponent given twice", pos_);
      ++pos_;
      exp = exponent();
    }
    return {std::move(idx), exp ? std::move(*exp) : Node{'#', 1, {}}};
  }

  TermTemplate term(bool negative) {
    TermTemplate t;
    skip_ws();
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(std::to_string(number()));
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        den = mpz_class(std::to_string(number()));
        if (den == 0) throw ParseError("zero denominator", at);
      }
      t.coeff = mpq_class(num, den);
      t.coeff.canonicalize();
      skip_ws();
      if (peek() == '*') ++pos_;
      else if (peek() != 'x') need_factor = false;
    }
    if (need_factor) {
      t.factors.push_back(factor());
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        t.factors.push_back(factor());
        skip_ws();
      }
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void push_unique(std::vector<Polynomial>& out, Polynomial f) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

bool uses_only(const Polynomial& f, const VariableSet& vars) {
  for (const auto& t : f.terms())
    for (const auto& fac : t.monomial.factors())
      if (!vars.contains(fac.index)) return false;
  return true;
}

}  // namespace

FamilyTemplate FamilyTemplate::parse(const std::string& text) {
  FamilyTemplate t;
  t.text_ = text;
  t.terms_ = std::make_shared<const std::vector<TermTemplate>>(TemplateScanner(text).parse());
  return t;
}

std::optional<Polynomial> FamilyTemplate::instantiate(const RingPtr& ring, std::int64_t i,
                                                      std::int64_t p) const {
  std::vector<std::pair<Coefficient, Monomial>> terms;
  for (const auto& t : *terms_) {
    std::vector<Factor> factors;
    for (const auto& [idx, exp] : t.factors) {
      const std::int64_t index = idx.eval(i, p);
      const std::int64_t e = exp.eval(i, p);
      if (index < 1 || e < 0) return std::nullopt;
      if (index > std::numeric_limits<VarIndex>::max() ||
          e > std::numeric_limits<Exponent>::max())
        throw std::overflow_error("template instantiation out of range");
      if (e > 0) factors.push_back({static_cast<VarIndex>(index), static_cast<Exponent>(e)});
    }
    terms.emplace_back(ring->coefficient(t.coeff), Monomial(std::move(factors)));
  }
  return Polynomial(ring, std::move(terms));
}

IdealPresentation IdealPresentation::explicit_generators(RingPtr ring, std::vector<Polynomial> gens,
                                                         VariableSet variables) {
  IdealPresentation I;
  I.ring_ = std::move(ring);
  I.variables_ = std::move(variables);
  for (auto& g : gens) {
    if (g.is_zero()) throw ZeroPolynomial("ideal generators must be nonzero");
    Polynomial h = g.in_ring(I.ring_);
    if (!uses_only(h, I.variables_))
      throw std::invalid_argument("generator " + h.to_string() + " leaves the variable set " +
                                  I.variables_.describe());
    push_unique(I.explicit_, std::move(h));
  }
  return I;
}

IdealPresentation IdealPresentation::family(RingPtr ring, FamilyTemplate rule, std::int64_t p,
                                            VariableSet index_set) {
  IdealPresentation I;
  I.ring_ = std::move(ring);
  I.rule_ = std::move(rule);
  I.p_ = p;
  I.variables_ = std::move(index_set);
  return I;
}

IdealPresentation IdealPresentation::binomial_family(RingPtr ring, std::uint32_t p, VariableSet w) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (!w.scaled_into_itself(p, 10000))
    throw std::invalid_argument("the index set is not closed under multiplication by p");
  return family(std::move(ring), FamilyTemplate::parse("x{i}^p - x{p*i}"), p, std::move(w));
}

std::vector<Polynomial> IdealPresentation::instantiate(TruncationWindow window) const {
  std::vector<Polynomial> out;
  if (!rule_) {
    for (const auto& g : explicit_)
      if (window.admits(g)) out.push_back(g);
    return out;
  }
  // Indices and degrees of the supported templates grow with i, so parameters
  // beyond n + D cannot produce a generator inside the window.
  const std::uint64_t last = std::uint64_t{window.var_bound} + window.degree_bound;
  for (std::uint64_t i = 1; i <= last; ++i) {
    if (!variables_.contains(static_cast<VarIndex>(i))) continue;
    auto f = rule_->instantiate(ring_, static_cast<std::int64_t>(i), p_);
    if (!f) continue;
    if (f->is_zero())
      throw std::invalid_argument("family generator at i = " + std::to_string(i) + " is zero");
    if (!uses_only(*f, variables_))
      throw std::invalid_argument("family generator " + f->to_string() +
                                  " leaves the variable set " + variables_.describe());
    if (window.admits(*f)) push_unique(out, std::move(*f));
  }
  return out;
}

IdealPresentation IdealPresentation::with_order(OrderKind order) const {
  IdealPresentation I = *this;
  I.ring_ = ring_->with_order(order);
  for (auto& g : I.explicit_) g = g.in_ring(I.ring_);
  return I;
}

std::string IdealPresentation::describe() const {
  if (rule_)
    return "family " + rule_->text() + " (p = " + std::to_string(p_) + ", i in " +
           variables_.describe() + ")";
  return "ideal with " + std::to_string(explicit_.size()) + " explicit generators";
}

InitialIdealComparison compare_initial_ideals(std::span<const Polynomial> basis,
                                              std::span<const Polynomial> truncated_basis,
                                              VarIndex n, Degree degree_bound) {
  std::vector<Monomial> mine;
  std::vector<Monomial> theirs;
  for (const auto& g : basis) {
    const Monomial& m = g.lm();
    if (m.max_index() <= n && g.ring()->degree(m) <= degree_bound) mine.push_back(m);
  }
  for (const auto& g : truncated_basis) {
    const Monomial& m = g.lm();
    if (g.ring()->degree(m) <= degree_bound) theirs.push_back(m);
  }
  auto covered = [](const std::vector<Monomial>& by, const std::vector<Monomial>& what) {
    return std::all_of(what.begin(), what.end(), [&](const Monomial& m) {
      return std::any_of(by.begin(), by.end(), [&](const Monomial& d) { return divides(d, m); });
    });
  };
  InitialIdealComparison out;
  out.contains = covered(mine, theirs);
  out.equal = out.contains && covered(theirs, mine);
  return out;
}

namespace {

std::vector<Polynomial> truncated_reduced(const IdealPresentation& ideal, TruncationWindow w) {
  const auto gens = ideal.instantiate(w);
  if (gens.empty()) return {};
  return reduce_basis(buchberger_truncated(gens, ideal.ring(), w)).elements();
}

}  // namespace

GroebnerBasis assemble_filtration(const IdealPresentation& ideal,
                                  const std::vector<TruncationWindow>& windows) {
  if (windows.empty()) throw std::invalid_argument("at least one window is required");
  for (std::size_t k = 1; k < windows.size(); ++k)
    if (windows[k].var_bound <= windows[k - 1].var_bound ||
        windows[k].degree_bound < windows[k - 1].degree_bound)
      throw std::invalid_argument("windows must increase strictly in the variable bound");

  std::vector<std::vector<Polynomial>> per_window;
  std::vector<Polynomial> all;
  for (const auto& w : windows) {
    per_window.push_back(truncated_reduced(ideal, w));
    for (const auto& g : per_window.back()) push_unique(all, g);
  }
  std::vector<VarIndex> verified;
  for (std::size_t k = 0; k < windows.size(); ++k) {
    const auto cmp = compare_initial_ideals(all, per_window[k], windows[k].var_bound,
                                            windows[k].degree_bound);
    if (cmp.contains) verified.push_back(windows[k].var_bound);
  }
  const bool reduced = is_reduced_set(all);
  GroebnerBasis out(ideal.ring(), std::move(all), windows.back(), Certificate::Asserted, reduced);
  out.set_verified_windows(std::move(verified));
  return out;
}

StabilityReport stabilized_reduced_basis(const IdealPresentation& ideal, VarIndex max_n,
                                         VarIndex window_len, Degree degree_bound) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  if (window_len < 2) throw std::invalid_argument("window_len must be at least 2");
  window_len = std::min(window_len, max_n);
  const auto top = TruncationWindow::make(max_n, degree_bound);
  const auto gens = ideal.instantiate(top);
  const OrderKind ambient = ideal.ring()->order();

  // An elimination-compatible order: lm(g) in S<n> forces g in S<n>, so the
  // basis elements inside S<n> form a basis of the contraction.
  const bool homogeneous = std::all_of(gens.begin(), gens.end(),
                                       [](const Polynomial& g) { return g.is_homogeneous(); });
  const OrderKind elim = homogeneous ? OrderKind::HomLex : OrderKind::PureLex;
  const RingPtr elim_ring = ideal.ring()->with_order(elim);
  std::vector<Polynomial> elim_basis;
  if (!gens.empty()) {
    std::vector<Polynomial> converted;
    for (const auto& g : gens) converted.push_back(g.in_ring(elim_ring));
    elim_basis = buchberger_truncated(converted, elim_ring, top).elements();
  }

  std::vector<std::vector<Polynomial>> G(max_n + 1);
  StabilityReport rep;
  for (VarIndex n = 1; n <= max_n; ++n) {
    auto R = restrict_to(elim_basis, n);
    if (!R.empty()) {
      Degree d = degree_bound;
      for (const auto& g : R) d = std::max(d, g.degree());
      const auto w = TruncationWindow::make(n, d);
      std::vector<Polynomial> conv;
      for (const auto& g : R) conv.push_back(g.in_ring(ideal.ring()));
      GroebnerBasis basis = ambient == elim
          ? GroebnerBasis(ideal.ring(), conv, w, Certificate::BuchbergerVerified, false)
          : buchberger_truncated(conv, ideal.ring(), w);
      G[n] = reduce_basis(basis).elements();
    }
    rep.sizes.push_back(G[n].size());
  }

  const VarIndex lo = max_n - window_len + 1;
  auto in = [](const std::vector<Polynomial>& v, const Polynomial& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
  };
  for (const auto& g : G[max_n]) {
    VarIndex m = max_n;
    while (m > 1 && in(G[m - 1], g)) --m;
    if (m <= lo) {
      rep.stable.push_back(g);
      rep.entered_at.push_back(m);
    }
  }
  for (VarIndex n = lo; n <= max_n; ++n)
    for (const auto& g : G[n])
      if (!in(rep.stable, g) && !in(rep.unstable, g)) rep.unstable.push_back(g);
  rep.stabilized = true;
  for (VarIndex n = lo; n < max_n; ++n)
    if (G[n] != G[max_n]) rep.stabilized = false;
  rep.max_n = max_n;
  rep.window_len = window_len;
  rep.degree_bound = degree_bound;
  rep.caveat =
      "G_n is the reduced basis, up to degree " + std::to_string(degree_bound) +
      ", of the contraction to S<n> of the ideal generated inside S<" + std::to_string(max_n) +
      ">; persistence through the last " + std::to_string(window_len) +
      " indices is evidence, not proof, of membership in the limit basis";
  return rep;
}

}  // namespace infinigb
