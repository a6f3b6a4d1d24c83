#include "infinigb/weights.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace infinigb {

WeightedAlphabet::WeightedAlphabet(std::vector<Degree> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(tail) {
  if (std::any_of(prefix_.begin(), prefix_.end(), [](Degree d) { return d < 1; }))
    throw std::invalid_argument("variable weights must be positive");
  if (tail_.scale < 1) throw std::invalid_argument("weight tail must be increasing (scale >= 1)");
  const auto first_tail = static_cast<std::int64_t>(prefix_.size()) + 1;
  if (static_cast<std::int64_t>(tail_.scale) * first_tail + tail_.offset < 1)
    throw std::invalid_argument("weight tail produces a non-positive weight");
  // Drop a prefix that coincides with the tail so that equality is semantic.
  while (!prefix_.empty()) {
    const auto i = static_cast<std::int64_t>(prefix_.size());
    if (static_cast<std::int64_t>(prefix_.back()) != static_cast<std::int64_t>(tail_.scale) * i + tail_.offset)
      break;
    prefix_.pop_back();
  }
}

Degree WeightedAlphabet::weight(VarIndex index) const {
  if (index >= 1 && index <= prefix_.size()) return prefix_[index - 1];
  return static_cast<Degree>(static_cast<std::int64_t>(tail_.scale) * index + tail_.offset);
}

VarIndex WeightedAlphabet::max_index_with_weight_at_most(Degree d) const {
  VarIndex best = 0;
  for (VarIndex i = 1; i <= prefix_.size(); ++i)
    if (prefix_[i - 1] <= d) best = i;
  const std::int64_t bound = static_cast<std::int64_t>(d) - tail_.offset;
  if (bound > 0) {
    const auto tail_max = static_cast<std::uint64_t>(bound) / tail_.scale;
    if (tail_max > prefix_.size()) best = static_cast<VarIndex>(tail_max);
  }
  return best;
}

std::string WeightedAlphabet::describe() const {
  if (is_standard()) return "std";
  std::ostringstream os;
  for (std::size_t i = 0; i < prefix_.size(); ++i) os << (i ? "," : "") << prefix_[i];
  os << ";tail=" << tail_.scale << "*i";
  if (tail_.offset >= 0) os << "+";
  os << tail_.offset;
  return os.str();
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("malformed integer in weight rule: '" + std::string(s) + "'");
  return v;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

}  // namespace

WeightedAlphabet WeightedAlphabet::parse(const std::string& raw) {
  const std::string text = strip(raw);
  if (text.empty() || text == "std") return {};
  std::string prefix_part = text;
  Tail tail;
  if (auto semi = text.find(';'); semi != std::string::npos) {
    prefix_part = text.substr(0, semi);
    std::string t = text.substr(semi + 1);
    if (t.rfind("tail=", 0) != 0) throw std::invalid_argument("expected 'tail=' in weight rule");
    t = t.substr(5);
    auto star = t.find("*i");
    if (star == std::string::npos) throw std::invalid_argument("tail must have the form A*i+B");
    tail.scale = static_cast<std::uint64_t>(parse_int(t.substr(0, star)));
    std::string rest = t.substr(star + 2);
    if (!rest.empty()) {
      if (rest[0] == '+') rest = rest.substr(1);
      tail.offset = parse_int(rest);
    }
  }
  std::vector<Degree> prefix;
  std::size_t start = 0;
  while (start <= prefix_part.size() && !prefix_part.empty()) {
    auto comma = prefix_part.find(',', start);
    auto piece = prefix_part.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto v = parse_int(piece);
    if (v < 1) throw std::invalid_argument("variable weights must be positive");
    prefix.push_back(static_cast<Degree>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return WeightedAlphabet(std::move(prefix), tail);
}

}  // namespace infinigb
