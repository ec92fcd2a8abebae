#include <benchmark/benchmark.h>

#include "locind/cohind.hpp"
#include "locind/harness.hpp"
#include "locind/hecke.hpp"

using namespace locind;

namespace {

void BM_DerivedClosedOrbit(benchmark::State& state) {
  const PairData pair = closed_orbit_pair();
  const GradedModule V = one_dim_module(pair, {-4, 0}, Weight{-4});
  const Window w = Window::interval(-static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derived_p(pair, V, 0, w));
}
BENCHMARK(BM_DerivedClosedOrbit)->Arg(10)->Arg(30)->Arg(60);

void BM_DerivedOpenOrbit(benchmark::State& state) {
  const PairData pair = open_orbit_pair();
  const GradedModule V = one_dim_module(pair, {1, 0}, Weight{}, 1);
  const Window w = Window::interval(-static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derived_p(pair, V, 0, w));
}
BENCHMARK(BM_DerivedOpenOrbit)->Arg(10)->Arg(30);

void BM_DerivedBorelWeilBott(benchmark::State& state) {
  const PairData pair = borel_weil_bott_pair();
  const int n = static_cast<int>(state.range(0));
  const GradedModule V = one_dim_module(pair, {n, 0}, Weight{n});
  for (auto _ : state) benchmark::DoNotOptimize(derived_p(pair, V, 1, Window::interval(0, 12)));
}
BENCHMARK(BM_DerivedBorelWeilBott)->Arg(0)->Arg(5);

void BM_DerivedProduct(benchmark::State& state) {
  const PairData pair = product_pair(closed_orbit_pair(), closed_orbit_pair());
  const GradedModule V = one_dim_module(pair, {-2, -3, 0, 0}, Weight{-2, -3});
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derived_p(pair, V, 0, Window::box(2, -r, r)));
}
BENCHMARK(BM_DerivedProduct)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const PairData pair = closed_orbit_pair();
  const GradedModule V = one_dim_module(pair, {-4, 0}, Weight{-4});
  for (auto _ : state) benchmark::DoNotOptimize(p_deg0_oracle(pair, V, Window::interval(-30, 30)));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

void BM_HeckeMul(benchmark::State& state) {
  const HeckeAlgebra R(closed_orbit_pair());
  const UElt e = R.from_ambient({1, 0, 0}), f = R.from_ambient({0, 0, 1});
  const int k = static_cast<int>(state.range(0));
  UElt ek = R.U().one(), fk = R.U().one();
  for (int i = 0; i < k; ++i) ek = R.U().mul(ek, e), fk = R.U().mul(fk, f);
  const RgKElt a = R.element(rk_idempotent(Weight{0}), ek), b = R.element(rk_idempotent(Weight{2 * k}), fk);
  for (auto _ : state) benchmark::DoNotOptimize(R.mul(b, a));
}
BENCHMARK(BM_HeckeMul)->Arg(1)->Arg(4)->Arg(8);

void BM_RunCase(benchmark::State& state) {
  VerificationCase c;
  c.family = Family::A;
  c.lambda = {-4};
  c.id = "A:l=-4";
  c.check_stability = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_case(c));
}
BENCHMARK(BM_RunCase)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
