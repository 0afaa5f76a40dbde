#include "casimir/engine.hpp"
#include "casimir/material_io.hpp"

#include <benchmark/benchmark.h>

using namespace casimir;

namespace {

const MaterialSpec& ge() {
  static const MaterialSpec m = load_material(CASIMIR_SOURCE_DIR "/data/materials/ge.json");
  return m;
}

void BM_DriftReflection(benchmark::State& state) {
  const SurfaceResponse s(ge(), ReflectionModel::drift(), 2.5e14, 300.0);
  double k = 1e6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.r_tm(k));
    benchmark::DoNotOptimize(s.r_te(k));
    k = k * 1.0001;
  }
}
BENCHMARK(BM_DriftReflection);

void BM_FreeEnergy(benchmark::State& state) {
  const double d = static_cast<double>(state.range(0)) * 1e-9;
  const HalfSpaceConfig cfg = HalfSpaceConfig::symmetric(ge(), ReflectionModel::drift(), d, 300.0);
  const SummationPolicy policy;
  for (auto _ : state) benchmark::DoNotOptimize(free_energy_per_area(cfg, Polarization::Both, policy));
}
BENCHMARK(BM_FreeEnergy)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_PressureThreads(benchmark::State& state) {
  const HalfSpaceConfig cfg = HalfSpaceConfig::symmetric(ge(), ReflectionModel::drift(), 1e-7, 30.0);
  SummationPolicy policy;
  policy.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pressure(cfg, policy));
}
BENCHMARK(BM_PressureThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Entropy(benchmark::State& state) {
  const HalfSpaceConfig cfg =
      HalfSpaceConfig::symmetric(ge(), ReflectionModel::drift(), 1e-6, static_cast<double>(state.range(0)));
  const SummationPolicy policy;
  for (auto _ : state) benchmark::DoNotOptimize(entropy_per_area(cfg, policy));
}
BENCHMARK(BM_Entropy)->Arg(300)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
