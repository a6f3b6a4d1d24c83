// Serial reference vs OpenMP path for the three parallel kernels. The second
// benchmark argument selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "infinigb/groebner.hpp"
#include "infinigb/ideal.hpp"
#include "infinigb/kernels.hpp"
#include "infinigb/partition.hpp"
#include "infinigb/random.hpp"

using namespace infinigb;

namespace {

Execution path(const benchmark::State& state) {
  return state.range(1) ? Execution::Parallel : Execution::Serial;
}

// Five generic cubics in x1..x5, all of weight 1.
std::vector<Polynomial> cubics(const RingPtr& ring, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 5; ++k) gens.push_back(random_polynomial(rng, ring, {5, 3, 10, 5, true}));
  return gens;
}

// All S-pairs of a dense random homogeneous ideal, reduced against it.
void BM_ReduceSPairs(benchmark::State& state) {
  const auto ring = Ring::make(OrderKind::HomRevLex, WeightedAlphabet::parse("1,1,1,1,1"));
  const auto gens = cubics(ring, 11);
  const auto window = TruncationWindow::make(5, static_cast<Degree>(state.range(0)));
  const auto basis = buchberger_truncated(gens, ring, window).elements();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_s_pairs(basis, pairs, path(state)));
  state.counters["pairs"] = static_cast<double>(pairs.size());
}

void BM_Buchberger(benchmark::State& state) {
  const auto ring = Ring::make(OrderKind::HomRevLex, WeightedAlphabet::parse("1,1,1,1,1"));
  const auto gens = cubics(ring, 12);
  const auto window = TruncationWindow::make(5, static_cast<Degree>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(buchberger_truncated(gens, ring, window, {true, path(state)}));
}

void BM_VerifyFamily(benchmark::State& state) {
  const auto ring = Ring::make(OrderKind::HomAntiRevLex);
  const auto n = static_cast<VarIndex>(state.range(0));
  const auto window = TruncationWindow::make(n, n);
  const auto gens = IdealPresentation::binomial_family(ring, 2, VariableSet::all()).instantiate(window);
  for (auto _ : state) benchmark::DoNotOptimize(verify_buchberger(gens, window, path(state)));
}

void BM_CountTable(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_table(FamilySpec::q(), n, path(state)));
}

}  // namespace

BENCHMARK(BM_ReduceSPairs)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Buchberger)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyFamily)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTable)->ArgsProduct({{60, 90}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
