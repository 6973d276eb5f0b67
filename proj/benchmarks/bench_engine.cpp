#include <benchmark/benchmark.h>

#include <random>

#include "gnslab/engine.hpp"
#include "gnslab/harness.hpp"

namespace {

gnslab::Configuration random_tape(std::size_t width, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<gnslab::Symbol> cells(width);
  for (auto& c : cells) c = static_cast<gnslab::Symbol>(rng() % static_cast<std::uint64_t>(k));
  return gnslab::Configuration(std::move(cells), k, gnslab::Boundary::Periodic);
}

void BM_Step(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const int radius = static_cast<int>(state.range(1));
  const auto rule = gnslab::decode_rule(radius == 1 ? 110u : 0x9E3779B9u, 2, radius);
  auto tape = random_tape(width, 2, 1);
  for (auto _ : state) {
    tape = gnslab::step(tape, rule);
    benchmark::DoNotOptimize(tape);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width));
}
BENCHMARK(BM_Step)->ArgsProduct({{1024, 16384}, {1, 2}});

void BM_EvolveRule110(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const auto rule = gnslab::decode_rule(110, 2, 1);
  const auto tape = random_tape(1024, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gnslab::evolve(tape, rule, steps));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(steps * 1024));
}
BENCHMARK(BM_EvolveRule110)->Arg(128)->Arg(512);

void BM_SweepTrial(benchmark::State& state) {
  gnslab::ExperimentConfig cfg(gnslab::decode_rule(110, 2, 1));
  cfg.width = 1024;
  cfg.steps = 512;
  cfg.seed = 7;
  const auto a = gnslab::GeneratorSpec::parse("random:32");
  const auto b = gnslab::GeneratorSpec::parse("periodic:32:01");
  std::size_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gnslab::run_trial(cfg, trial++, a, b, 64));
}
BENCHMARK(BM_SweepTrial)->Unit(benchmark::kMillisecond);

}  // namespace
