#include <benchmark/benchmark.h>

#include "intgeo/mc_verify.hpp"

using namespace intgeo::mc;

namespace {

void run_kinematic(benchmark::State& state, Exec exec) {
  ConvexBody disk = ConvexBody::ball(Vec{{0.0, 0.0}}, 1.0);
  ConvexBody sq = ConvexBody::box(Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}});
  RunOptions opt;
  opt.samples = static_cast<std::uint64_t>(state.range(0));
  opt.exec = exec;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_principal_kinematic(disk, sq, opt).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void run_additive(benchmark::State& state, Exec exec) {
  ConvexBody cube = ConvexBody::box(Vec{{0.0, 0.0, 0.0}}, Vec{{1.0, 1.0, 1.0}});
  RunOptions opt;
  opt.samples = static_cast<std::uint64_t>(state.range(0));
  opt.exec = exec;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_additive(cube, cube, opt).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_KinematicSerial(benchmark::State& s) { run_kinematic(s, Exec::serial); }
void BM_KinematicParallel(benchmark::State& s) { run_kinematic(s, Exec::parallel); }
void BM_AdditiveSerial(benchmark::State& s) { run_additive(s, Exec::serial); }
void BM_AdditiveParallel(benchmark::State& s) { run_additive(s, Exec::parallel); }

}  // namespace

BENCHMARK(BM_KinematicSerial)->Arg(1 << 16)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KinematicParallel)->Arg(1 << 16)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdditiveSerial)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdditiveParallel)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
