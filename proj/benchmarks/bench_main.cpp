#include <benchmark/benchmark.h>

#include "wiretap/gamesim.hpp"
#include "wiretap/payoff.hpp"
#include "wiretap/prob.hpp"
#include "wiretap/regions.hpp"

using namespace wiretap;

namespace {

SystemSpec figure_spec(double p) {
  return SystemSpec(FiniteDistribution::bernoulli(p), Channel::bsc(0.0),
                    Channel::bsc(0.3), ValueMatrix::hamming(2));
}

void BM_MutualInformation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  JointDistribution joint =
      JointDistribution::product(FiniteDistribution::uniform(n),
                                 Channel::uniform_mix(n, 0.3))
          .attach(Channel::uniform_mix(n, 0.2), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(mutual_information(joint, {0}, {2}, {1}));
}
BENCHMARK(BM_MutualInformation)->Arg(4)->Arg(8)->Arg(16);

void BM_HammingPayoffCurve(benchmark::State& state) {
  FiniteDistribution source = FiniteDistribution::bernoulli(0.37);
  for (auto _ : state)
    for (int k = 0; k <= 100; ++k)
      benchmark::DoNotOptimize(hamming_payoff_fn(source, 0.03 * k));
}
BENCHMARK(BM_HammingPayoffCurve);

void BM_SecrecyPayoffSearch(benchmark::State& state) {
  FiniteDistribution source = FiniteDistribution::bernoulli(0.3);
  ValueMatrix hamming = ValueMatrix::hamming(2);
  SecrecySearch budget;
  budget.restarts = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        secrecy_payoff_fn(source, hamming, 0.5, 0, budget));
}
BENCHMARK(BM_SecrecyPayoffSearch)->Arg(8)->Arg(64);

void BM_BscHammingPayoff(benchmark::State& state) {
  FiniteDistribution source = FiniteDistribution::bernoulli(0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(bsc_hamming_payoff(source, 0.0, 0.3));
}
BENCHMARK(BM_BscHammingPayoff);

void BM_Figure4Grid(benchmark::State& state) {
  std::vector<double> grid(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = 0.5 * static_cast<double>(i) / (grid.size() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(figure4_curves(grid, 0.0, 0.3));
}
BENCHMARK(BM_Figure4Grid)->Arg(11)->Arg(101);

void BM_ExactEvePayoff(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SystemSpec spec = figure_spec(0.5);
  BlockCode code = make_identity_code(spec, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(optimal_eve_payoff(spec, code));
}
BENCHMARK(BM_ExactEvePayoff)->Arg(2)->Arg(4)->Arg(6);

void BM_BinningCodeBuild(benchmark::State& state) {
  SystemSpec spec = figure_spec(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        make_binning_code(spec, 4, 0.5, 0.5, 0, {0.25, 4}));
}
BENCHMARK(BM_BinningCodeBuild);

void BM_WeakSecrecy(benchmark::State& state) {
  SystemSpec spec = figure_spec(0.5);
  BlockCode code = make_binning_code(spec, 4, 0.5, 0.5, 0, {0.25, 4});
  for (auto _ : state) benchmark::DoNotOptimize(weak_secrecy(spec, code));
}
BENCHMARK(BM_WeakSecrecy);

}  // namespace

BENCHMARK_MAIN();
