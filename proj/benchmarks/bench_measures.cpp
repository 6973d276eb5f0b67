#include <benchmark/benchmark.h>

#include <random>

#include "gnslab/complexity.hpp"

namespace {

std::vector<gnslab::Symbol> noise(std::size_t n, int k) {
  std::mt19937_64 rng(n);
  std::vector<gnslab::Symbol> out(n);
  for (auto& s : out) s = static_cast<gnslab::Symbol>(rng() % static_cast<std::uint64_t>(k));
  return out;
}

void BM_Lz78(benchmark::State& state) {
  const auto s = noise(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(gnslab::lz78_phrase_count(s));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Lz78)->Range(256, 1 << 16);

void BM_BlockEntropy(benchmark::State& state) {
  const auto s = noise(4096, 2);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gnslab::block_entropy(s, m));
}
BENCHMARK(BM_BlockEntropy)->Arg(1)->Arg(8)->Arg(64);

void BM_Bdm(benchmark::State& state) {
  std::string text;
  for (int v = 0; v < 256; ++v) {
    std::string block;
    for (int b = 7; b >= 0; --b) block.push_back(static_cast<char>('0' + ((v >> b) & 1)));
    text += block + " " + std::to_string(20.0 + v % 7) + "\n";
  }
  const auto table = gnslab::parse_ctm_table(text, 2);
  const auto s = noise(4096, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gnslab::bdm(s, table));
}
BENCHMARK(BM_Bdm);

}  // namespace
BENCHMARK_MAIN();
