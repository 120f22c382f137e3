#include <benchmark/benchmark.h>

#include "sympgeo/reconstruct.hpp"
#include "sympgeo/rng.hpp"

namespace {

using namespace sympgeo;

void BM_field_mul(benchmark::State& state) {
  const Gf& f = field_of_order(int(state.range(0)));
  felem acc = 1;
  for (auto _ : state) {
    for (int a = 1; a < f.q(); ++a) acc = f.mul(acc, felem(a));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_field_mul)->Arg(16)->Arg(25);

void BM_rref(benchmark::State& state) {
  const Gf& f = field_of_order(int(state.range(0)));
  SplitMix64 rng(42);
  Mat m = random_matrix(rng, f, 32, 64);
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_rref)->Arg(2)->Arg(3);

void BM_enumerate(benchmark::State& state) {
  const Gf& f = field_of_order(2);
  for (auto _ : state) {
    GrassmannianEnumerator en(f, 6, 3);
    int count = 0;
    while (en.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate);

void BM_singular_set(benchmark::State& state) {
  const Gf& f = field_of_order(int(state.range(0)));
  BilinearForm om = standard_symplectic(f, 4);
  for (auto _ : state) {
    PlaneSet s = singular_set(om, 2);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_singular_set)->Arg(2)->Arg(3);

void BM_reconstruct(benchmark::State& state) {
  const Gf& f = field_of_order(2);
  PlaneSet s = singular_set(standard_symplectic(f, 4), 2);
  for (auto _ : state) {
    ReconstructResult r = reconstruct_form(s);
    benchmark::DoNotOptimize(std::holds_alternative<ReconstructionReport>(r));
  }
}
BENCHMARK(BM_reconstruct);

}  // namespace

BENCHMARK_MAIN();
