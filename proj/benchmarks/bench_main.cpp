#include <benchmark/benchmark.h>

#include "negbeta/gaps.hpp"
#include "negbeta/measure.hpp"
#include "negbeta/spectra.hpp"
#include "negbeta/words.hpp"
#include "negbeta/yrrap.hpp"

using namespace negbeta;

namespace {

NumberField quartic() {
  return NumberField::from_poly(RationalPoly{-1, -1, 0, 0, 1}, {Rational(6, 5), Rational(5, 4)});
}

void BM_OrbitRational(benchmark::State& state) {
  Base b = Base::rational(Rational(9, 8));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_of_one(b, static_cast<std::size_t>(state.range(0)), false));
}
BENCHMARK(BM_OrbitRational)->Arg(64)->Arg(256);

void BM_OrbitQuartic(benchmark::State& state) {
  Base b = Base::exact(quartic());
  for (auto _ : state) benchmark::DoNotOptimize(orbit_of_one(b, static_cast<std::size_t>(state.range(0)), false));
}
BENCHMARK(BM_OrbitQuartic)->Arg(64)->Arg(1024);

void BM_Classify(benchmark::State& state) {
  Base b = Base::rational(Rational(1009, 1000));
  for (auto _ : state) benchmark::DoNotOptimize(classify(b));
}
BENCHMARK(BM_Classify);

void BM_BuildStructure(benchmark::State& state) {
  Base b = Base::rational(Rational(107, 100));
  for (auto _ : state) benchmark::DoNotOptimize(build_structure(b));
}
BENCHMARK(BM_BuildStructure);

void BM_Identities(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Identities)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Ulam(benchmark::State& state) {
  Base b = Base::rational(Rational(9, 8));
  UlamOptions o;
  o.bins = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ulam_estimate(b, o));
}
BENCHMARK(BM_Ulam)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Birkhoff(benchmark::State& state) {
  Base b = Base::rational(Rational(5, 4));
  for (auto _ : state) benchmark::DoNotOptimize(birkhoff_histogram(b, 0.5L, 1000000, 4096));
}
BENCHMARK(BM_Birkhoff)->Unit(benchmark::kMillisecond);

void BM_BuildMatrix(benchmark::State& state) {
  NumberField f = quartic();
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(f));
}
BENCHMARK(BM_BuildMatrix);

}  // namespace

BENCHMARK_MAIN();
