#include <benchmark/benchmark.h>

#include <memory>
#include <string>

#include "qpcohom/document.hpp"
#include "qpcohom/geometry.hpp"
#include "qpcohom/hochschild.hpp"
#include "qpcohom/theorems.hpp"

using namespace qpc;

namespace {

std::string fixture(const std::string& name) { return std::string(QPCOHOM_FIXTURE_DIR) + "/" + name; }

void BM_BuildJacobianE8(benchmark::State& state) {
  QP qp = load_document(fixture("e8_tilted.qp")).qp();
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_algebra(qp).dim());
}
BENCHMARK(BM_BuildJacobianE8)->Unit(benchmark::kMillisecond);

void BM_Hh1E8(benchmark::State& state) {
  auto a = std::make_shared<const FiniteDimAlgebra>(jacobian_algebra(load_document(fixture("e8_tilted.qp")).qp()));
  for (auto _ : state) benchmark::DoNotOptimize(hh1(a));
}
BENCHMARK(BM_Hh1E8)->Unit(benchmark::kMillisecond);

void BM_BarComplexStar(benchmark::State& state) {
  auto a = std::make_shared<const FiniteDimAlgebra>(
      jacobian_algebra(load_document(fixture("star_" + std::to_string(state.range(0)) + ".qp")).qp()));
  for (auto _ : state) benchmark::DoNotOptimize(bar_h1_dim(*a, Bimodule::regular(a)));
}
BENCHMARK(BM_BarComplexStar)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TheoremAE8(benchmark::State& state) {
  auto d = load_document(fixture("e8_tilted.qp"));
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem_a(*d.quiver, d.relations).hh1_b);
}
BENCHMARK(BM_TheoremAE8)->Unit(benchmark::kMillisecond);

void BM_EnumerateOncePunctured(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_once_punctured(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateOncePunctured)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_ReducedOracle(benchmark::State& state) {
  auto t = *load_document(fixture("joined_punctures.surf")).triangulation;
  for (auto _ : state) {
    QP qp = reduce_local(adjacency_qp(t), t).qp;
    benchmark::DoNotOptimize(hh1(std::make_shared<const FiniteDimAlgebra>(jacobian_algebra(qp))));
  }
}
BENCHMARK(BM_ReducedOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
