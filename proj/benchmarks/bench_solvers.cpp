#include <benchmark/benchmark.h>

#include "scp/exact.hpp"
#include "scp/greedy.hpp"
#include "scp/io.hpp"
#include "scp/squares.hpp"

namespace {

scp::Instance make_instance(int n, std::uint64_t seed) {
  return scp::io::gen_random_points(n, 10.0, seed);
}

void BM_GreedyMinRadius(benchmark::State& state) {
  auto inst = make_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto res = scp::min_radius_greedy(inst, 3, 1);
    benchmark::DoNotOptimize(res.radius);
  }
}
BENCHMARK(BM_GreedyMinRadius)->Arg(32)->Arg(128)->Arg(512);

void BM_GreedyMinRadiusParallel(benchmark::State& state) {
  auto inst = make_instance(256, 1);
  for (auto _ : state) {
    auto res = scp::min_radius_greedy(inst, 3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(res.radius);
  }
}
BENCHMARK(BM_GreedyMinRadiusParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_BicriteriaMinRadius(benchmark::State& state) {
  auto inst = make_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto res = scp::min_radius_bicriteria(inst, 17, 2.0, 1);
    benchmark::DoNotOptimize(res.radius);
  }
}
BENCHMARK(BM_BicriteriaMinRadius)->Arg(64)->Arg(256);

void BM_ExactDecide(benchmark::State& state) {
  auto inst = scp::io::gen_clustered(2, static_cast<int>(state.range(0)), 0.5,
                                     10.0, 3);
  for (auto _ : state) {
    auto res = scp::exact_decide(inst, 2, 1.0, {});
    benchmark::DoNotOptimize(res.status);
  }
}
BENCHMARK(BM_ExactDecide)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
