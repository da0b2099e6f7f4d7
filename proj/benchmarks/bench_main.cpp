#include <benchmark/benchmark.h>

#include "isodouble/bending.hpp"
#include "isodouble/clifford.hpp"
#include "isodouble/doubling.hpp"
#include "isodouble/fkm.hpp"

using namespace isodouble;

static void BM_BuildSystem(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_system(m, 1, 0));
}
BENCHMARK(BM_BuildSystem)->Arg(3)->Arg(5)->Arg(8)->Arg(9);

static void BM_VerifySystem(benchmark::State& state) {
  const auto sys = build_system(static_cast<int>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_system(sys));
}
BENCHMARK(BM_VerifySystem)->Arg(4)->Arg(8)->Arg(9);

static void BM_CartanMunznerCheck(benchmark::State& state) {
  const FkmPolynomial poly(build_system(static_cast<int>(state.range(0)), 2, 0));
  for (auto _ : state) benchmark::DoNotOptimize(cartan_munzner_check(poly, 100));
}
BENCHMARK(BM_CartanMunznerCheck)->Arg(3)->Arg(4)->Arg(5);

static void BM_ShapeSpectrum(benchmark::State& state) {
  const FkmPolynomial poly(build_system(4, 2, 0));
  const auto p = sample_level_point(poly, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(shape_spectrum(poly, p));
}
BENCHMARK(BM_ShapeSpectrum);

static void BM_SampleLevelPoint(benchmark::State& state) {
  const FkmPolynomial poly(build_system(4, 2, 0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_level_point(poly, 0.3, ++seed));
}
BENCHMARK(BM_SampleLevelPoint);

static void BM_BuildAndCertify(benchmark::State& state) {
  const IsoparametricFamily fam(4, 4, 3);
  CurveRequest req;
  req.r_bar = 0.4;
  req.r_inf = 0.02;
  req.k_max = 4.0;
  req.step = 1e-4;
  for (auto _ : state) {
    const auto curve = build_curve(req);
    benchmark::DoNotOptimize(certify(curve, fam));
  }
}
BENCHMARK(BM_BuildAndCertify)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
