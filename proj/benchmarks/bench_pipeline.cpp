#include "asreg/extalgebra.hpp"
#include "asreg/report.hpp"
#include "asreg/twist.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <memory>

using namespace asreg;

namespace {

const char* kFiles[] = {"poly3.alg", "qspace3.alg", "jordan.alg",
                        "heisenberg.alg"};

AlgebraPresentation load(const char* name) {
  std::ifstream in(std::string(ASREG_CORPUS_DIR) + "/" + name);
  return parse_presentation(in);
}

void BM_Groebner(benchmark::State& state) {
  auto p = load(kFiles[state.range(0)]);
  state.SetLabel(kFiles[state.range(0)]);
  for (auto _ : state)
    benchmark::DoNotOptimize(QuotientAlgebra(p, 10));
}

void BM_Resolution(benchmark::State& state) {
  auto p = load(kFiles[state.range(0)]);
  state.SetLabel(kFiles[state.range(0)]);
  auto A = std::make_shared<const QuotientAlgebra>(p, 10);
  for (auto _ : state)
    benchmark::DoNotOptimize(minimal_resolution(A, 10, 5));
}

void BM_ExtProducts(benchmark::State& state) {
  auto p = load(kFiles[state.range(0)]);
  state.SetLabel(kFiles[state.range(0)]);
  auto A = std::make_shared<const QuotientAlgebra>(p, 10);
  Resolution P = minimal_resolution(A, 10, 5);
  for (auto _ : state) {
    ExtAlgebra E = ext_basis(P);
    compute_products(E, P);
    benchmark::DoNotOptimize(E);
  }
}

void BM_Pipeline(benchmark::State& state) {
  auto p = load(kFiles[state.range(0)]);
  state.SetLabel(kFiles[state.range(0)]);
  PipelineOptions o;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_pipeline(p, o));
}

void BM_Twist(benchmark::State& state) {
  auto p = load("poly3.alg");
  auto s = AutomorphismSpec::diagonal(
      std::vector<Scalar>{Scalar(p.field, 2L), Scalar(p.field, 3L),
                          Scalar(p.field, 5L)},
      p.generator_degrees());
  for (auto _ : state)
    benchmark::DoNotOptimize(graded_twist({p, s}, 10));
}

} // namespace

BENCHMARK(BM_Groebner)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Resolution)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtProducts)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Twist)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
