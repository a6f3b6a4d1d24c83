// Independent reference implementations used as oracles by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "infinigb/polynomial.hpp"

namespace oracle {

using Parts = std::vector<std::uint32_t>;

// Every partition of n, parts non-increasing, by plain recursion.
inline void all_partitions_rec(std::uint32_t n, std::uint32_t max, Parts& cur,
                               std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    all_partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> all_partitions(std::uint32_t n) {
  std::vector<Parts> out;
  Parts cur;
  all_partitions_rec(n, n, cur, out);
  return out;
}

inline std::size_t count_if_partitions(std::uint32_t n, const std::function<bool(const Parts&)>& keep) {
  std::size_t c = 0;
  for (const auto& p : all_partitions(n))
    if (keep(p)) ++c;
  return c;
}

inline std::size_t max_multiplicity(const Parts& p) {
  std::map<std::uint32_t, std::size_t> m;
  std::size_t best = 0;
  for (auto k : p) best = std::max(best, ++m[k]);
  return best;
}

// Rank of a list of sparse rows over Q (or GF(q) when q > 0).
inline std::size_t rank(std::vector<std::map<std::size_t, mpq_class>> rows, unsigned long q = 0) {
  auto normalize = [q](mpq_class v) {
    if (q == 0) return v;
    mpz_class num = v.get_num() % q, den = v.get_den() % q;
    if (num < 0) num += q;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(q).get_mpz_t());
    return mpq_class(mpz_class(num * inv % q));
  };
  for (auto& r : rows) {
    for (auto it = r.begin(); it != r.end();) {
      it->second = normalize(it->second);
      it = it->second == 0 ? r.erase(it) : std::next(it);
    }
  }
  std::size_t rk = 0;
  std::vector<std::map<std::size_t, mpq_class>> pivots;
  for (auto r : rows) {
    for (const auto& p : pivots) {
      const auto lead = p.begin()->first;
      auto it = r.find(lead);
      if (it == r.end()) continue;
      const mpq_class factor = it->second / p.begin()->second;
      for (const auto& [col, v] : p) {
        auto& cell = r[col];
        cell = normalize(cell - factor * v);
        if (cell == 0) r.erase(col);
      }
    }
    if (!r.empty()) {
      pivots.push_back(std::move(r));
      std::sort(pivots.begin(), pivots.end(),
                [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
      ++rk;
    }
  }
  return rk;
}

}  // namespace oracle
