#include "infinigb/variables.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace infinigb {

VariableSet VariableSet::residues(std::uint32_t modulus, std::vector<std::uint32_t> residues) {
  if (modulus == 0) throw std::invalid_argument("residue modulus must be positive");
  for (auto& r : residues) r %= modulus;
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  if (residues.empty()) throw std::invalid_argument("a variable set needs at least one residue");
  VariableSet s;
  s.modulus_ = modulus;
  s.residues_ = std::move(residues);
  if (s.residues_.size() == modulus) {
    s.modulus_ = 1;
    s.residues_ = {0};
  }
  return s;
}

VariableSet VariableSet::pm_mod(std::uint32_t k, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  return residues(m, {k % m, (m - k % m) % m});
}

VariableSet VariableSet::nonzero_mod(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("nonzero_mod needs q >= 2");
  std::vector<std::uint32_t> r;
  for (std::uint32_t i = 1; i < q; ++i) r.push_back(i);
  return residues(q, std::move(r));
}

namespace {

std::uint32_t to_u32(std::string_view s, const std::string& whole) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed variable set '" + whole + "'");
  return v;
}

}  // namespace

VariableSet VariableSet::parse(const std::string& text) {
  if (text == "all") return all();
  if (text == "odd") return odd();
  const auto mod = text.rfind("mod");
  if (mod == std::string::npos) throw std::invalid_argument("unknown variable set '" + text + "'");
  const std::string_view head = std::string_view(text).substr(0, mod);
  const std::uint32_t m = to_u32(std::string_view(text).substr(mod + 3), text);
  if (head.starts_with("pm")) return pm_mod(to_u32(head.substr(2), text), m);
  if (head == "nonzero") return nonzero_mod(m);
  if (head.starts_with("res")) {
    std::vector<std::uint32_t> rs;
    std::string_view list = head.substr(3);
    while (!list.empty()) {
      const auto comma = list.find(',');
      rs.push_back(to_u32(list.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    return residues(m, std::move(rs));
  }
  throw std::invalid_argument("unknown variable set '" + text + "'");
}

bool VariableSet::contains(VarIndex i) const noexcept {
  if (i == 0) return false;
  if (bound_ && i > *bound_) return false;
  return std::binary_search(residues_.begin(), residues_.end(), i % modulus_);
}

VariableSet VariableSet::bounded(VarIndex n) const {
  VariableSet s = *this;
  s.bound_ = bound_ ? std::min(*bound_, n) : n;
  return s;
}

std::vector<VarIndex> VariableSet::members_up_to(VarIndex n) const {
  std::vector<VarIndex> out;
  for (VarIndex i = 1; i <= n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool VariableSet::scaled_into_itself(std::uint32_t p, VarIndex probe_limit) const {
  for (VarIndex w = 1; static_cast<std::uint64_t>(w) * p <= probe_limit; ++w) {
    if (!contains(w)) continue;
    // The bound only truncates the set; pW inside W is a statement about the residue rule.
    VariableSet unbounded = *this;
    unbounded.bound_.reset();
    if (!unbounded.contains(w * p)) return false;
  }
  return true;
}

std::string VariableSet::describe() const {
  std::string s;
  if (modulus_ == 1) {
    s = "all";
  } else if (modulus_ == 2 && residues_ == std::vector<std::uint32_t>{1}) {
    s = "odd";
  } else {
    s = "res";
    for (std::size_t k = 0; k < residues_.size(); ++k) s += (k ? "," : "") + std::to_string(residues_[k]);
    s += "mod" + std::to_string(modulus_);
  }
  if (bound_) s += "<=" + std::to_string(*bound_);
  return s;
}

}  // namespace infinigb
