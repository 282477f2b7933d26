// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cl3exp/batch.hpp"

namespace {

std::vector<cl3::Multivector> make_batch(cl3::Signature sig, std::size_t n) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::vector<cl3::Multivector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cl3::Coefficients c;
    for (double& x : c) x = coef(rng);
    out.emplace_back(sig, c);
  }
  return out;
}

void BM_exp_batch(benchmark::State& state, cl3::Engine engine, bool parallel) {
  const auto in = make_batch(cl3::Signature::cl30(), static_cast<std::size_t>(state.range(0)));
  std::vector<cl3::Multivector> out(in.size(), cl3::Multivector(cl3::Signature::cl30()));
  for (auto _ : state) {
    if (parallel) {
      cl3::exp_batch(in, out, engine);
    } else {
      cl3::exp_batch_serial(in, out, engine);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_discrepancy(benchmark::State& state) {
  const auto in = make_batch(cl3::Signature::cl03(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const double d = Parallel ? cl3::max_engine_discrepancy(in) : cl3::max_engine_discrepancy_serial(in);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_exp_batch, closed_serial, cl3::Engine::Closed, false)->Range(64, 16384);
BENCHMARK_CAPTURE(BM_exp_batch, closed_omp, cl3::Engine::Closed, true)->Range(64, 16384);
BENCHMARK_CAPTURE(BM_exp_batch, series_serial, cl3::Engine::Series, false)->Range(64, 16384);
BENCHMARK_CAPTURE(BM_exp_batch, series_omp, cl3::Engine::Series, true)->Range(64, 16384);
BENCHMARK_TEMPLATE(BM_discrepancy, false)->Range(64, 4096);
BENCHMARK_TEMPLATE(BM_discrepancy, true)->Range(64, 4096);

BENCHMARK_MAIN();
