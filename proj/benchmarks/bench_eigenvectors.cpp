// Kappa-product eigenvectors vs the echelon-form null space on seeded matrices.
// Field-operation counts are reported as counters next to the timings.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "eigenmatrix/kappa.hpp"
#include "eigenmatrix/verify.hpp"

namespace {

using namespace eigenmatrix;

struct Sample {
  Matrix a;
  Spectrum s;
};

std::vector<Sample> samples(std::size_t dim, bool defective) {
  std::vector<Sample> out;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const auto cfg = random_config(1000 * dim + seed, dim, defective);
    out.push_back({random_spectral_matrix(cfg).a, cfg.spectrum});
  }
  return out;
}

void report(benchmark::State& state, const OpCounter& total) {
  const double iters = static_cast<double>(state.iterations());
  state.counters["mults"] = static_cast<double>(total.scalar_mults) / iters;
  state.counters["adds"] = static_cast<double>(total.scalar_adds) / iters;
  state.counters["divs"] = static_cast<double>(total.scalar_divs) / iters;
}

void BM_Kappa(benchmark::State& state) {
  const auto set = samples(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  OpCounter total;
  for (auto _ : state) {
    for (const auto& x : set) {
      for (const auto& e : x.s) benchmark::DoNotOptimize(eigenvectors_via_kappa(x.a, x.s, e.value, &total));
    }
  }
  report(state, total);
}

void BM_Oracle(benchmark::State& state) {
  const auto set = samples(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  OpCounter total;
  for (auto _ : state) {
    for (const auto& x : set) {
      for (const auto& e : x.s) benchmark::DoNotOptimize(oracle_eigenvectors(x.a, e.value, &total));
    }
  }
  report(state, total);
}

}  // namespace

BENCHMARK(BM_Kappa)->ArgsProduct({{2, 3, 4, 5}, {0, 1}});
BENCHMARK(BM_Oracle)->ArgsProduct({{2, 3, 4, 5}, {0, 1}});

BENCHMARK_MAIN();
