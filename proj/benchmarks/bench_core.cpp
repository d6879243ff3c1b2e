// Microbenchmarks for the hot paths: bracket arithmetic, operator-family
// evaluation, grid fitting, component closure, and one full identity sample.

#include <benchmark/benchmark.h>

#include <map>

#include "hamrep/interpolation.hpp"
#include "hamrep/poly_field.hpp"
#include "hamrep/rep_data.hpp"
#include "hamrep/torus_field.hpp"
#include "hamrep/weight_module.hpp"

namespace {

using namespace hamrep;

RepData sp2_rep() {
  IrreducibleSpec spec = sp_defining_rep(1);
  spec.mu = {Rational(1), Rational(0)};
  return from_sp_rep(spec);
}

RepData sp4_rep() {
  IrreducibleSpec spec = sp_defining_rep(2);
  spec.mu.assign(4, Rational(1, 2));
  return from_sp_rep(spec);
}

void BM_TorusBracket(benchmark::State& state) {
  TorusField a(2), b(2);
  a.add_d(0, Rational(1, 2));
  a.add_h(MultiIndex{1, -2, 0, 3}, Rational(5, 3));
  a.add_h(MultiIndex{0, 1, 1, -1}, Rational(-2));
  b.add_h(MultiIndex{2, 0, -1, 1}, Rational(7, 4));
  b.add_h(MultiIndex{-1, 1, 2, 0}, Rational(1));
  b.add_d(3, Rational(-1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(bracket(a, b));
}
BENCHMARK(BM_TorusBracket);

void BM_PolyBracket(benchmark::State& state) {
  const PolyField u = PolyField::basis(2, MultiIndex{2, 1, 0, 3});
  const PolyField v = PolyField::basis(2, MultiIndex{0, 2, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(x_bracket(u, v));
}
BENCHMARK(BM_PolyBracket);

void BM_HOperator(benchmark::State& state) {
  const RepData rep = sp4_rep();
  const MultiIndex r{3, 1, 2, 4};
  for (auto _ : state) benchmark::DoNotOptimize(h_operator(rep, r));
}
BENCHMARK(BM_HOperator);

void BM_ModuleAction(benchmark::State& state) {
  const RepData rep = sp4_rep();
  const WeightModule mod{rep, std::vector<Rational>(4, Rational(1, 2))};
  ModuleElement x(4, 4);
  x.add_term(MultiIndex{1, 0, -2, 1},
             RatVec{Rational(1), Rational(-1, 2), Rational(0), Rational(3)});
  x.add_term(MultiIndex{0, 2, 0, -1},
             RatVec{Rational(2, 3), Rational(1), Rational(-1), Rational(0)});
  const MultiIndex r{2, -1, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(act_h(mod, r, x));
}
BENCHMARK(BM_ModuleAction);

void BM_FitOnGrid(benchmark::State& state) {
  const RepData rep = sp2_rep();
  const GridSpec grid = GridSpec::positive_uniform(2, 4);
  std::map<MultiIndex, RatMatrix> samples;
  for (const auto& r : grid.points()) samples.emplace(r, h_operator(rep, r));
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_on_grid(samples, grid, rep.degree_bound));
}
BENCHMARK(BM_FitOnGrid);

void BM_ComponentClosure(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_irreducible_component(1, 4));
}
BENCHMARK(BM_ComponentClosure);

void BM_JacobiSample(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_jacobi(2, 10, 42, 3));
}
BENCHMARK(BM_JacobiSample);

}  // namespace

BENCHMARK_MAIN();
