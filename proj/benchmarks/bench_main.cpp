#include <benchmark/benchmark.h>

#include "scholz/class_group.hpp"
#include "scholz/real_quadratic.hpp"
#include "scholz/symbols.hpp"
#include "scholz/verify.hpp"

using namespace scholz;

static void BM_Jacobi(benchmark::State& state) {
  u64 n = 1000003;
  i64 a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi(a, n));
    a = (a * 48271) % static_cast<i64>(n - 1) + 1;
  }
}
BENCHMARK(BM_Jacobi);

static void BM_QuarticRational(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quartic_rational(Integer(13), 17));
}
BENCHMARK(BM_QuarticRational);

static void BM_FormClassGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(narrow_class_group(state.range(0)));
}
BENCHMARK(BM_FormClassGroup)->Arg(221)->Arg(2021)->Arg(20005);

static void BM_EpsSymbol(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eps_symbol(5, 29));
}
BENCHMARK(BM_EpsSymbol);

static void BM_VerifyTsrc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_tsrc(13, 17));
}
BENCHMARK(BM_VerifyTsrc);

static void BM_ClassGroupQi(benchmark::State& state) {
  const auto& F = GroundField::get(FieldId::Qi);
  auto K = RelQuadField::build(F, F.mul(RingElement(1, 4), RingElement(5, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(class_group(K).h);
}
BENCHMARK(BM_ClassGroupQi)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
