#include <benchmark/benchmark.h>

#include "fusionring/fusion.hpp"
#include "fusionring/ideal.hpp"
#include "fusionring/verify.hpp"

using namespace fusionring;

namespace {

const RootDatum& R(const char* t) { return root_datum(parse_lie_type(t)); }

void BM_StraightenAffineE8(benchmark::State& state) {
  const auto& rd = R("E8");
  const auto g = ReflectionGroupSpec::affine(21 + rd.dual_coxeter);
  const Weight w = make_weight({3, 0, 2, 1, 0, 4, 1, 9});
  for (auto _ : state) benchmark::DoNotOptimize(straighten(rd, w, g));
}
BENCHMARK(BM_StraightenAffineE8);

void BM_WeylDimensionF4(benchmark::State& state) {
  const auto& rd = R("F4");
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dimension(rd, make_weight({1, 1, 1, 1})));
}
BENCHMARK(BM_WeylDimensionF4);

// Freudenthal on a weight not seen before in each iteration (the memo is global).
void BM_WeightSystemE7(benchmark::State& state) {
  const auto& rd = R("E7");
  int m = 1;
  for (auto _ : state) benchmark::DoNotOptimize(weight_system(rd, make_weight({0, 0, 0, 0, 0, 1, m++})).dimension);
}
BENCHMARK(BM_WeightSystemE7)->Iterations(6)->Unit(benchmark::kMillisecond);

void BM_TensorE6(benchmark::State& state) {
  const auto& rd = R("E6");
  const Weight a = make_weight({1, 0, 0, 0, 0, 1});
  const Weight b = make_weight({0, 1, 0, 0, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(tensor_irreducibles(rd, a, b));
}
BENCHMARK(BM_TensorE6);

void BM_KacWaltonTable(benchmark::State& state) {
  const auto& rd = R("D4");
  for (auto _ : state) benchmark::DoNotOptimize(kac_walton_table(rd, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KacWaltonTable)->Arg(2)->Arg(4);

void BM_LatticeB3(benchmark::State& state) {
  const auto& rd = R("B3");
  for (auto _ : state) benchmark::DoNotOptimize(verify_ideal_equality(rd, 2));
}
BENCHMARK(BM_LatticeB3)->Unit(benchmark::kMillisecond);

void BM_SteinbergE8(benchmark::State& state) {
  const auto& rd = R("E8");
  for (auto _ : state) benchmark::DoNotOptimize(steinberg_basis(rd, complement_of(rd, 7)));
}
BENCHMARK(BM_SteinbergE8)->Unit(benchmark::kMillisecond);

void BM_DeriveE8(benchmark::State& state) {
  const auto& rd = R("E8");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derive_fusion_ideal(rd, k));
}
BENCHMARK(BM_DeriveE8)->Arg(20)->Arg(21)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
