#include "infinigb/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "infinigb/errors.hpp"

namespace infinigb {

namespace {

std::vector<Factor> normalize(std::vector<Factor> factors) {
  for (const auto& f : factors)
    if (f.index == 0) throw std::invalid_argument("variable indices are 1-based");
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.index < b.index; });
  std::vector<Factor> out;
  out.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().index == f.index)
      out.back().exponent += f.exponent;
    else
      out.push_back(f);
  }
  return out;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Factor> factors)
    : factors_(normalize(std::vector<Factor>(factors))) {}

Monomial::Monomial(std::vector<Factor> factors) : factors_(normalize(std::move(factors))) {}

Monomial Monomial::variable(VarIndex index, Exponent exponent) {
  return Monomial({Factor{index, exponent}});
}

Exponent Monomial::exponent(VarIndex index) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                             [](const Factor& f, VarIndex i) { return f.index < i; });
  return (it != factors_.end() && it->index == index) ? it->exponent : 0;
}

Exponent Monomial::total_exponent() const noexcept {
  Exponent s = 0;
  for (const auto& f : factors_) s += f.exponent;
  return s;
}

bool structural_less(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
      [](const Factor& x, const Factor& y) {
        return x.index != y.index ? x.index < y.index : x.exponent < y.exponent;
      });
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& f : m.factors()) {
    h ^= (static_cast<std::size_t>(f.index) << 32) ^ f.exponent;
    h *= 0x100000001b3ull;
  }
  return h;
}

Degree degree(const Monomial& m, const WeightedAlphabet& w) {
  Degree d = 0;
  if (w.is_standard()) {
    for (const auto& f : m.factors()) d += static_cast<Degree>(f.index) * f.exponent;
  } else {
    for (const auto& f : m.factors()) d += w.weight(f.index) * f.exponent;
  }
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  out.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->index < j->index) {
      out.push_back(*i++);
    } else if (j->index < i->index) {
      out.push_back(*j++);
    } else {
      out.push_back({i->index, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.factors_.end());
  out.insert(out.end(), j, b.factors_.end());
  return Monomial(Monomial::Sorted{}, std::move(out));
}

std::optional<Monomial> try_divide(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  out.reserve(a.factors_.size());
  auto i = a.factors_.begin();
  for (const auto& f : b.factors_) {
    while (i != a.factors_.end() && i->index < f.index) out.push_back(*i++);
    if (i == a.factors_.end() || i->index != f.index || i->exponent < f.exponent) return std::nullopt;
    if (i->exponent > f.exponent) out.push_back({i->index, i->exponent - f.exponent});
    ++i;
  }
  out.insert(out.end(), i, a.factors_.end());
  return Monomial(Monomial::Sorted{}, std::move(out));
}

bool divides(const Monomial& d, const Monomial& m) noexcept {
  auto mf = m.factors();
  auto i = mf.begin();
  for (const auto& f : d.factors()) {
    while (i != mf.end() && i->index < f.index) ++i;
    if (i == mf.end() || i->index != f.index || i->exponent < f.exponent) return false;
    ++i;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  out.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->index < j->index) {
      out.push_back(*i++);
    } else if (j->index < i->index) {
      out.push_back(*j++);
    } else {
      out.push_back({i->index, std::max(i->exponent, j->exponent)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.factors_.end());
  out.insert(out.end(), j, b.factors_.end());
  return Monomial(Monomial::Sorted{}, std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  auto af = a.factors(), bf = b.factors();
  auto i = af.begin(), j = bf.begin();
  while (i != af.end() && j != bf.end()) {
    if (i->index < j->index)
      ++i;
    else if (j->index < i->index)
      ++j;
    else
      return false;
  }
  return true;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(f.index);
    if (f.exponent != 1) {
      s += '^';
      s += std::to_string(f.exponent);
    }
  }
  return s;
}

namespace {

class MonomialScanner {
 public:
  explicit MonomialScanner(std::string_view text) : text_(text) {}

  Monomial parse() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
      return {};
    }
    std::vector<Factor> factors;
    factors.push_back(factor());
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      factors.push_back(factor());
      skip_ws();
    }
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return Monomial(std::move(factors));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xffffffffull) throw ParseError("number too large", start);
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a number", pos_);
    return v;
  }
  Factor factor() {
    if (peek() != 'x') throw ParseError("expected a variable 'x<index>'", pos_);
    ++pos_;
    const std::size_t at = pos_;
    const auto index = number();
    if (index == 0) throw ParseError("variable indices are 1-based", at);
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      e = number();
    }
    return {static_cast<VarIndex>(index), static_cast<Exponent>(e)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void enumerate_degree(Degree remaining, VarIndex max_var, const WeightedAlphabet& w,
                      const std::function<bool(VarIndex)>& admit, std::vector<Factor>& stack,
                      std::vector<Monomial>& out) {
  if (remaining == 0) {
    std::vector<Factor> f(stack.rbegin(), stack.rend());
    out.emplace_back(std::move(f));
    return;
  }
  for (VarIndex v = max_var; v >= 1; --v) {
    if (admit && !admit(v)) continue;
    const Degree wv = w.weight(v);
    if (wv > remaining) continue;
    for (Exponent e = 1; static_cast<Degree>(e) * wv <= remaining; ++e) {
      stack.push_back({v, e});
      enumerate_degree(remaining - e * wv, v - 1, w, admit, stack, out);
      stack.pop_back();
    }
  }
}

}  // namespace

Monomial parse_monomial(std::string_view text) { return MonomialScanner(text).parse(); }

std::vector<Monomial> monomials_of_degree(Degree d, const WeightedAlphabet& w,
                                          const std::function<bool(VarIndex)>& admit) {
  std::vector<Monomial> out;
  std::vector<Factor> stack;
  enumerate_degree(d, w.max_index_with_weight_at_most(d), w, admit, stack, out);
  std::sort(out.begin(), out.end(), StructuralLess{});
  return out;
}

}  // namespace infinigb
