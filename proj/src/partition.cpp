#include "infinigb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "infinigb/errors.hpp"

namespace infinigb {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] == 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  skip();
  std::vector<Part> parts;
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    for (;;) {
      skip();
      const std::size_t start = pos;
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v > std::numeric_limits<Part>::max()) throw ParseError("part too large", start);
        ++pos;
      }
      if (start == pos) throw ParseError("expected a part", pos);
      parts.push_back(static_cast<Part>(v));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos);
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::uint64_t Partition::weight() const noexcept {
  std::uint64_t s = 0;
  for (auto k : parts_) s += k;
  return s;
}

std::size_t Partition::multiplicity(Part k) const noexcept {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s + ')';
}

WpSpec WpSpec::make(VariableSet w, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (!w.scaled_into_itself(p, 10000))
    throw std::invalid_argument("W is not closed under multiplication by p");
  return WpSpec{std::move(w), p};
}

std::string WpSpec::describe() const {
  return "W = " + w.describe() + ", p = " + std::to_string(p);
}

namespace {
constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
}

FamilySpec FamilySpec::x(const WpSpec& spec) {
  return FamilySpec(
      "X",
      [w = spec.w, p = spec.p](Part k) { return w.contains(k) && !(k % p == 0 && w.contains(k / p)); },
      kUnbounded, 0);
}

FamilySpec FamilySpec::y(const WpSpec& spec) {
  return FamilySpec("Y", [w = spec.w](Part k) { return w.contains(k); }, spec.p - 1, 0);
}

FamilySpec FamilySpec::a() {
  return FamilySpec("A", [](Part k) { return k % 6 == 1 || k % 6 == 5; }, kUnbounded, 0);
}

FamilySpec FamilySpec::b() {
  return FamilySpec("B", [](Part k) { return k % 3 != 0; }, 1, 1);
}

FamilySpec FamilySpec::c() {
  return FamilySpec("C", [](Part k) { return k % 2 == 1; }, 2, 0);
}

FamilySpec FamilySpec::p() {
  return FamilySpec("P", [](Part k) { return k % 5 == 1 || k % 5 == 4; }, kUnbounded, 0);
}

FamilySpec FamilySpec::q() {
  return FamilySpec("Q", [](Part) { return true; }, 1, 2);
}

FamilySpec FamilySpec::named(const std::string& name) {
  if (name == "A") return a();
  if (name == "B") return b();
  if (name == "C") return c();
  if (name == "P") return p();
  if (name == "Q") return q();
  throw std::invalid_argument("unknown partition family '" + name + "'");
}

bool FamilySpec::contains(const Partition& lambda) const {
  const auto& parts = lambda.parts();
  std::size_t run = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!part_(parts[k])) return false;
    if (k > 0 && parts[k] == parts[k - 1]) {
      if (++run > max_mult_ || min_gap_ > 0) return false;
    } else {
      run = 1;
      if (k > 0 && parts[k - 1] - parts[k] < min_gap_) return false;
    }
  }
  return true;
}

namespace {

// Visits every member of weight `remaining` below `last`, part by part.
template <class Visit>
void walk(const FamilySpec& f, std::uint32_t remaining, Part last, std::size_t run,
          std::vector<Part>& stack, Visit& visit) {
  if (remaining == 0) {
    visit(stack);
    return;
  }
  Part top = std::min<Part>(remaining, last == 0 ? remaining : last);
  for (Part v = top; v >= 1; --v) {
    if (!f.admits_part(v)) continue;
    std::size_t next_run = 1;
    if (v == last) {
      if (f.min_gap() > 0 || run >= f.max_multiplicity()) continue;
      next_run = run + 1;
    } else if (last != 0 && last - v < f.min_gap()) {
      continue;
    }
    stack.push_back(v);
    walk(f, remaining - v, v, next_run, stack, visit);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(const FamilySpec& family, std::uint32_t n) {
  std::vector<Partition> out;
  std::vector<Part> stack;
  auto visit = [&](const std::vector<Part>& parts) { out.emplace_back(parts); };
  walk(family, n, 0, 0, stack, visit);
  return out;
}

std::uint64_t count(const FamilySpec& family, std::uint32_t n) {
  std::uint64_t total = 0;
  std::vector<Part> stack;
  auto visit = [&](const std::vector<Part>&) { ++total; };
  walk(family, n, 0, 0, stack, visit);
  return total;
}

std::vector<std::uint64_t> count_table(const FamilySpec& family, std::uint32_t n,
                                       Execution execution) {
  std::vector<std::uint64_t> out(std::size_t{n} + 1, 0);
  for_each_index(out.size(), execution, [&](std::size_t k) {
    out[k] = count(family, static_cast<std::uint32_t>(k));
  });
  return out;
}

Monomial partition_to_monomial(const Partition& lambda) {
  std::vector<Factor> factors;
  for (auto k : lambda.parts()) factors.push_back({k, 1});
  return Monomial(std::move(factors));
}

Partition monomial_to_partition(const Monomial& m) {
  std::vector<Part> parts;
  for (const auto& f : m.factors())
    for (Exponent e = 0; e < f.exponent; ++e) parts.push_back(f.index);
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace infinigb
