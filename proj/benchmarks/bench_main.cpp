#include <benchmark/benchmark.h>

#include "finred/finite_torus.hpp"
#include "finred/root_datum.hpp"
#include "finred/series.hpp"
#include "finred/snf.hpp"
#include "finred/strata.hpp"

#include <random>
#include <string>

using namespace finred;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, long n) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

void BM_smith_normal_form(benchmark::State& state) {
  std::mt19937_64 rng(12345);
  long n = state.range(0);
  std::vector<IntMatrix> pool;
  for (int i = 0; i < 32; ++i) pool.push_back(random_matrix(rng, n));
  size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(pool[k % pool.size()]));
    ++k;
  }
}
BENCHMARK(BM_smith_normal_form)->Arg(2)->Arg(4)->Arg(8);

void BM_finite_torus(benchmark::State& state) {
  RootDatum rd = build_root_datum("B2-sc");
  FrobeniusTwist tw = make_twist(rd, 3, 1);
  WeylGroup wg = WeylGroup::enumerate(rd);
  SeqBarS w;
  for (long i : wg.at(wg.longest()).word) w.push_back(i + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(finite_torus(rd, tw, w));
  }
}
BENCHMARK(BM_finite_torus);

void BM_series_partition(benchmark::State& state) {
  RootDatum rd = build_root_datum("GL2");
  FrobeniusTwist tw = make_twist(rd, state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_partition(rd, tw));
  }
}
BENCHMARK(BM_series_partition)->Arg(2)->Arg(3)->Arg(5);

void BM_monodromy_table(benchmark::State& state) {
  RootDatum rd = build_root_datum("A2-sc");
  FrobeniusTwist tw = make_twist(rd, 3, 1);
  long r = state.range(0);
  SeqBarS w;
  for (long i = 0; i < r; ++i) w.push_back(i % 2 + 1);
  FiniteTorus t = finite_torus(rd, tw, w);
  TorusCharacter trivial{QZVec(
      static_cast<size_t>(t.group.num_generators()), QZ())};
  for (auto _ : state) {
    benchmark::DoNotOptimize(monodromy_table(rd, tw, w, trivial));
  }
}
BENCHMARK(BM_monodromy_table)->Arg(2)->Arg(4)->Arg(6);

void BM_pi0(benchmark::State& state) {
  RootDatum rd = build_root_datum("A2-ad");
  FrobeniusTwist tw = make_twist(rd, 3, 1);
  SeqBarS w{1, 2, 1};
  SeqBarS v{1, 0, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi0_S(rd, tw, w, v));
  }
}
BENCHMARK(BM_pi0);

}  // namespace

BENCHMARK_MAIN();
