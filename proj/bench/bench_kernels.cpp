// Serial reference path against the OpenMP path for each parallel kernel.

#include "ccr/focknum.hpp"
#include "ccr/liecore.hpp"
#include "ccr/phspace.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ccr;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

CMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(u(rng), u(rng));
  return m;
}

void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const CMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul(a, b, mode(state)));
  label(state);
}
BENCHMARK(BM_Matmul)->ArgsProduct({{0, 1}, {64, 256}})->Unit(benchmark::kMillisecond);

void BM_WignerGrid(benchmark::State& state) {
  const auto axis = linspace(-6.0, 6.0, static_cast<std::size_t>(state.range(1)));
  const GaussianState g = apply_sp2(GaussianState::ground(), squeeze(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid(g, axis, axis, mode(state)));
  label(state);
}
BENCHMARK(BM_WignerGrid)->ArgsProduct({{0, 1}, {201, 801}})->Unit(benchmark::kMillisecond);

void BM_ProtectedFamilyCheck(benchmark::State& state) {
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  const FockRealization fock(static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(protected_family_check(osc, fock, 4, mode(state)));
  label(state);
}
BENCHMARK(BM_ProtectedFamilyCheck)->ArgsProduct({{0, 1}, {10, 16}})->Unit(benchmark::kMillisecond);

void BM_StructureConstants(benchmark::State& state) {
  const GeneratorFamily o32 = o32_matrices();
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(o32, mode(state)));
  label(state);
}
BENCHMARK(BM_StructureConstants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
