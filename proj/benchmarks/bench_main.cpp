#include <benchmark/benchmark.h>

#include <random>

#include "monoprop/algebra.hpp"
#include "monoprop/axioms.hpp"
#include "monoprop/closed_forms.hpp"
#include "monoprop/just_set.hpp"
#include "monoprop/proportion.hpp"

using namespace monoprop;

namespace {

MonounaryAlgebra example4() {
  return MonounaryAlgebra({1, 0, 3, 3}, {"1", "2", "3", "4"});
}

void BM_JustSet(benchmark::State& state) {
  const MonounaryAlgebra a = example4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(just_set(a, 1, 0));
  }
}
BENCHMARK(BM_JustSet);

void BM_Decide(benchmark::State& state) {
  const MonounaryAlgebra a = example4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(proportion_holds(a, 0, 1, 3, 3).holds);
  }
}
BENCHMARK(BM_Decide);

void BM_ProportionTable(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  std::vector<Element> succ(n);
  for (auto& s : succ) s = pick(rng);
  const MonounaryAlgebra a(succ);
  for (auto _ : state) {
    ProportionTable table(a);
    benchmark::DoNotOptimize(table.proportion(0, 0, 0, 0));
  }
}
BENCHMARK(BM_ProportionTable)->Arg(4)->Arg(6)->Arg(9);

void BM_TransitivityFixture(benchmark::State& state) {
  const Fixture& f = fixture(Axiom::transitivity);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axiom(f.algebra, Axiom::transitivity).holds);
  }
}
BENCHMARK(BM_TransitivityFixture);

void BM_NatProportion(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint64_t a = 0; a <= 8; ++a) {
      for (std::uint64_t b = 0; b <= 8; ++b) {
        benchmark::DoNotOptimize(nat_proportion_holds(a, b, 5, 7).holds);
      }
    }
  }
}
BENCHMARK(BM_NatProportion);

void BM_BruteForceArrow(benchmark::State& state) {
  const MonounaryAlgebra a = example4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_arrow(a, 1, 0, 3, 2).holds);
  }
}
BENCHMARK(BM_BruteForceArrow);

}  // namespace

BENCHMARK_MAIN();
