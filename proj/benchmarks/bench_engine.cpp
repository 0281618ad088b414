#include <benchmark/benchmark.h>

#include "noether/noether.hpp"

using namespace noether;

namespace {

Expr oscillator() {
  Expr q = Expr::field(0), qd = Expr::field_jet(0, {0});
  return Expr::rational(1, 2) * qd * qd - Expr::rational(1, 2) * q * q;
}

}  // namespace

static void BM_Canonicalize(benchmark::State& state) {
  RandomBounds bounds;
  bounds.dim = 2;
  bounds.fields = 2;
  bounds.max_terms = static_cast<int>(state.range(0));
  Expr a = random_polynomial(1, bounds, 2);
  Expr b = random_polynomial(2, bounds, 2);
  Expr tangled = Expr::pow(a + b, 2) - a * a - Expr::integer(2) * a * b;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(tangled));
  }
}
BENCHMARK(BM_Canonicalize)->Arg(4)->Arg(8)->Arg(16);

static void BM_EulerLagrange(benchmark::State& state) {
  FieldSystem sys = FieldSystem::simple(2, 2);
  RandomBounds bounds;
  bounds.dim = 2;
  bounds.fields = 2;
  Polynomial lag = to_polynomial(random_polynomial(3, bounds, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_lagrange(lag, 0, sys));
    benchmark::DoNotOptimize(euler_lagrange(lag, 1, sys));
  }
}
BENCHMARK(BM_EulerLagrange);

static void BM_HomotopyPotential(benchmark::State& state) {
  RandomBounds bounds;
  bounds.dim = 2;
  bounds.fields = 2;
  FieldSystem sys = FieldSystem::simple(2, 2);
  Expr lag = random_divergence(5, bounds, sys);
  for (auto _ : state) {
    benchmark::DoNotOptimize(homotopy_potential(lag, sys));
  }
}
BENCHMARK(BM_HomotopyPotential);

static void BM_Classify(benchmark::State& state) {
  FieldSystem sys = FieldSystem::simple(1, 1);
  Expr lag = oscillator();
  Generator gen = Generator::make({Expr::integer(0)},
                                  {Expr::field_jet(0, {0})}, sys);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(lag, gen, sys));
  }
}
BENCHMARK(BM_Classify);

static void BM_IntegrateOscillator(benchmark::State& state) {
  FieldSystem sys = FieldSystem::simple(1, 1);
  Scenario s{sys, oscillator(),
             Generator::make({Expr::integer(0)}, {Expr::field_jet(0, {0})}, sys)};
  s.t1 = 1.0;
  s.q0 = {1.0};
  s.qdot0 = {0.0};
  s.integrator.dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntegrateOscillator)->Range(256, 4096)->Complexity();

BENCHMARK_MAIN();
