#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "infinigb/polynomial.hpp"

namespace infinigb {

/// Every data-parallel kernel has a serial reference path; tests require
/// both paths to produce identical results.
enum class Execution { Serial, Parallel };

/// Runs body(i) for i in [0, n). The parallel path uses an OpenMP worksharing
/// loop; the first exception thrown by any iteration is rethrown afterwards.
template <class Body>
void for_each_index(std::size_t n, Execution execution, Body&& body) {
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Full remainders of each input against one frozen basis snapshot.
std::vector<Polynomial> reduce_against(std::span<const Polynomial> inputs,
                                       std::span<const Polynomial> basis, Execution execution);

/// Remainders of S(basis[i], basis[j]) for each listed pair.
std::vector<Polynomial> reduce_s_pairs(std::span<const Polynomial> basis,
                                       std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                       Execution execution);

/// Number of OpenMP threads the parallel path would use.
int parallel_width();

}  // namespace infinigb
