#include "infinigb/kernels.hpp"

#include <omp.h>

#include "infinigb/division.hpp"

namespace infinigb {

std::vector<Polynomial> reduce_against(std::span<const Polynomial> inputs,
                                       std::span<const Polynomial> basis, Execution execution) {
  std::vector<Polynomial> out(inputs.size(), inputs.empty() ? Polynomial(nullptr) : Polynomial(inputs[0].ring()));
  for_each_index(inputs.size(), execution,
                 [&](std::size_t i) { out[i] = remainder(inputs[i], basis); });
  return out;
}

std::vector<Polynomial> reduce_s_pairs(std::span<const Polynomial> basis,
                                       std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                       Execution execution) {
  std::vector<Polynomial> out(pairs.size(), basis.empty() ? Polynomial(nullptr) : Polynomial(basis[0].ring()));
  for_each_index(pairs.size(), execution, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    out[k] = remainder(s_polynomial(basis[i], basis[j]), basis);
  });
  return out;
}

int parallel_width() { return omp_get_max_threads(); }

}  // namespace infinigb
