#include <benchmark/benchmark.h>

#include "monoidchar/char_equiv.hpp"
#include "monoidchar/language.hpp"
#include "monoidchar/monoid.hpp"

using namespace monoidchar;

namespace {

FiniteMonoid t3() {
  return monoid_from_transformations(3, {{1, 2, 0}, {1, 0, 2}, {0, 0, 2}});
}

Dfa golden_mean() {
  // same automaton as the test fixture
  Dfa d;
  d.states = 6;
  d.initial = 0;
  d.alphabet = {"0", "1"};
  d.accepting = {true, true, true, true, false, false};
  d.delta = {1, 4, 1, 2, 1, 5, 3, 4, 3, 5, 5, 5};
  return d;
}

void BM_TransformationClosure(benchmark::State& state) {
  for (auto _ : state) {
    FiniteMonoid M = monoid_from_transformations(
        4, {{1, 2, 3, 0}, {1, 0, 2, 3}, {0, 0, 2, 3}});
    benchmark::DoNotOptimize(M.size);
  }
}
BENCHMARK(BM_TransformationClosure);

void BM_EquivClosureT3(benchmark::State& state) {
  FiniteMonoid M = t3();
  FieldSpec fs = FieldSpec::rationals();
  for (auto _ : state) {
    EquivPartition P = equiv_closure(M, fs);
    benchmark::DoNotOptimize(P.num_classes());
  }
}
BENCHMARK(BM_EquivClosureT3);

void BM_WitnessPartitionT3(benchmark::State& state) {
  FiniteMonoid M = t3();
  FieldSpec fs = FieldSpec::rationals();
  for (auto _ : state) {
    EquivPartition P = partition_from_approx(M, fs);
    benchmark::DoNotOptimize(P.num_classes());
  }
}
BENCHMARK(BM_WitnessPartitionT3);

void BM_ZetaPipeline(benchmark::State& state) {
  Dfa dfa = golden_mean();
  for (auto _ : state) {
    ZetaReport rep = zeta_report(dfa, {FieldSpec::rationals()}, 16);
    benchmark::DoNotOptimize(rep.zeta.has_value());
  }
}
BENCHMARK(BM_ZetaPipeline);

}  // namespace

BENCHMARK_MAIN();
