#include "infinigb/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "infinigb/errors.hpp"

namespace infinigb {

RingPtr Ring::make(OrderKind order, WeightedAlphabet weights, Field field) {
  return RingPtr(new Ring(order, std::move(weights), field));
}

std::string Ring::describe() const {
  return std::string(order_name(order_)) + " weights=" + weights_.describe() + " field=" +
         field_.describe();
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

namespace {

std::strong_ordering term_cmp(const Term& a, const Term& b, OrderKind order) {
  return compare(a.monomial, a.degree, b.monomial, b.degree, order);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Term Polynomial::make_term(Coefficient c, Monomial m) const {
  const Degree d = ring_->degree(m);
  return Term{std::move(c), std::move(m), d};
}

Polynomial::Polynomial(RingPtr ring, std::vector<std::pair<Coefficient, Monomial>> terms)
    : ring_(std::move(ring)) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (auto& [c, m] : terms) {
    if (!(c.field() == ring_->field())) c = ring_->coefficient(c.to_rational());
    raw.push_back(make_term(std::move(c), std::move(m)));
  }
  const auto order = ring_->order();
  std::sort(raw.begin(), raw.end(),
            [order](const Term& a, const Term& b) { return term_cmp(a, b, order) > 0; });
  for (auto& t : raw) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  return term(std::move(ring), c, Monomial{});
}

Polynomial Polynomial::term(RingPtr ring, const Coefficient& c, Monomial m) {
  Polynomial p(std::move(ring));
  Coefficient cc = c.field() == p.ring_->field() ? c : p.ring_->coefficient(c.to_rational());
  if (!cc.is_zero()) p.terms_.push_back(p.make_term(std::move(cc), std::move(m)));
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m) {
  auto one = ring->coefficient(1);
  return term(std::move(ring), one, std::move(m));
}

Polynomial Polynomial::variable(RingPtr ring, VarIndex index, Exponent exponent) {
  return monomial(std::move(ring), Monomial::variable(index, exponent));
}

LeadingData Polynomial::leading() const {
  if (terms_.empty()) throw ZeroPolynomial("leading data of the zero polynomial");
  return {terms_.front().coeff, terms_.front().monomial};
}

const Monomial& Polynomial::lm() const {
  if (terms_.empty()) throw ZeroPolynomial("leading monomial of the zero polynomial");
  return terms_.front().monomial;
}

const Coefficient& Polynomial::lc() const {
  if (terms_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return terms_.front().coeff;
}

Degree Polynomial::degree() const noexcept {
  Degree d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree);
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.degree == terms_.front().degree; });
}

VarIndex Polynomial::max_variable_index() const noexcept {
  VarIndex n = 0;
  for (const auto& t : terms_) n = std::max(n, t.monomial.max_index());
  return n;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(lc().inverse());
}

Polynomial Polynomial::tail() const {
  Polynomial p = *this;
  if (!p.terms_.empty()) p.terms_.erase(p.terms_.begin());
  return p;
}

Polynomial Polynomial::in_ring(RingPtr ring) const {
  // Rational coefficients reduce into a prime field; nothing maps back.
  if (!(ring->field() == ring_->field()) && !ring_->field().is_rational())
    throw RingMismatch("cannot lift coefficients out of " + ring_->field().describe());
  std::vector<std::pair<Coefficient, Monomial>> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) raw.emplace_back(t.coeff, t.monomial);
  return Polynomial(std::move(ring), std::move(raw));
}

void Polynomial::check_ring(const Polynomial& g) const {
  if (!same_ring(ring_, g.ring_))
    throw RingMismatch("polynomials from different rings: " + ring_->describe() + " vs " +
                       g.ring_->describe());
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_ring(g);
  if (&g == this) return *this = scale(ring_->coefficient(2));
  const auto order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.cbegin();
  while (i != terms_.end() && j != g.terms_.cend()) {
    const auto c = term_cmp(*i, *j, order);
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Coefficient s = i->coeff + j->coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(s), std::move(i->monomial), i->degree});
      ++i;
      ++j;
    }
  }
  std::move(i, terms_.end(), std::back_inserter(out));
  out.insert(out.end(), j, g.terms_.cend());
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this += -g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  Polynomial acc(f.ring_);
  for (const auto& t : g.terms_) acc += f.mul_term(t.coeff, t.monomial);
  return acc;
}

Polynomial Polynomial::scale(const Coefficient& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.coeff * c, t.monomial, t.degree});
  return p;
}

Polynomial Polynomial::mul_term(const Coefficient& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  const Degree dm = ring_->degree(m);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.coeff * c, t.monomial * m, t.degree + dm});
  return p;
}

void Polynomial::sub_mul_term(const Coefficient& c, const Monomial& m, const Polynomial& g) {
  check_ring(g);
  if (c.is_zero() || g.is_zero()) return;
  if (&g == this) {
    const Polynomial copy = g;
    sub_mul_term(c, m, copy);
    return;
  }
  const auto order = ring_->order();
  const Degree dm = ring_->degree(m);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  for (const auto& gt : g.terms_) {
    Term s{-(gt.coeff * c), gt.monomial * m, gt.degree + dm};
    while (i != terms_.end() && term_cmp(*i, s, order) > 0) out.push_back(std::move(*i++));
    if (i != terms_.end() && i->monomial == s.monomial) {
      Coefficient sum = i->coeff + s.coeff;
      if (!sum.is_zero()) out.push_back(Term{std::move(sum), std::move(s.monomial), s.degree});
      ++i;
    } else {
      out.push_back(std::move(s));
    }
  }
  std::move(i, terms_.end(), std::back_inserter(out));
  terms_ = std::move(out);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += infinigb::to_string(t.monomial);
    }
  }
  return s;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t k = 0; k < f.terms_.size(); ++k)
    if (!(f.terms_[k].monomial == g.terms_[k].monomial) || !(f.terms_[k].coeff == g.terms_[k].coeff))
      return false;
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("S-polynomial of the zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch("S-polynomial across rings");
  const Monomial l = lcm(f.lm(), g.lm());
  Polynomial a = f.mul_term(f.lc().inverse(), *try_divide(l, f.lm()));
  a.sub_mul_term(g.lc().inverse(), *try_divide(l, g.lm()), g);
  return a;
}

bool CanonicalLess::operator()(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  const auto c = a.ring()->compare(a.lm(), b.lm());
  if (c != 0) return c < 0;
  return a.to_string() < b.to_string();
}

void sort_canonical(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end(), CanonicalLess{});
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolynomialScanner {
 public:
  PolynomialScanner(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<std::pair<Coefficient, Monomial>> terms;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    terms.push_back(term(negative));
    skip_ws();
    while (pos_ < text_.size()) {
      if (peek() != '+' && peek() != '-')
        throw ParseError("expected '+' or '-' between terms, found '" + std::string(1, peek()) + "'", pos_);
      negative = peek() == '-';
      ++pos_;
      skip_ws();
      terms.push_back(term(negative));
      skip_ws();
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t small_number(const char* what) {
    const std::size_t start = pos_;
    mpz_class v = integer();
    if (v > 0xffffffffu) throw ParseError(std::string(what) + " too large", start);
    return static_cast<std::uint32_t>(v.get_ui());
  }

  Factor factor() {
    if (peek() != 'x') throw ParseError("expected a variable 'x<index>'", pos_);
    ++pos_;
    const std::size_t at = pos_;
    const auto index = small_number("variable index");
    if (index == 0) throw ParseError("variable indices are 1-based", at);
    std::uint32_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      e = small_number("exponent");
    }
    return {index, e};
  }

  std::pair<Coefficient, Monomial> term(bool negative) {
    mpq_class c = 1;
    std::vector<Factor> factors;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      c = mpq_class(num, den);
      c.canonicalize();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (peek() != 'x') {
        need_factor = false;
      }
    }
    if (need_factor) {
      factors.push_back(factor());
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        skip_ws();
        factors.push_back(factor());
        skip_ws();
      }
    }
    if (negative) c = -c;
    return {ring_->coefficient(c), Monomial(std::move(factors))};
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return PolynomialScanner(ring, text).parse();
}

}  // namespace infinigb
