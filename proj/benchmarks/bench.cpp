#include <benchmark/benchmark.h>

#include "sqhnn/bns.hpp"
#include "sqhnn/cancel.hpp"
#include "sqhnn/hnn.hpp"
#include "sqhnn/npc.hpp"
#include "sqhnn/squarify.hpp"
#include "sqhnn/text.hpp"

namespace {

using namespace sqhnn;

const Endomorphism& phi() {
  static const Endomorphism f = parse_endomorphism("a -> a b^-1 a^2 b, b -> b a^-1 b^2 a");
  return f;
}

void BM_MaxPieceFlagship(benchmark::State& state) {
  const Presentation g = r_l_presentation(8);
  for (auto _ : state) benchmark::DoNotOptimize(max_piece(g).max_piece);
}
BENCHMARK(BM_MaxPieceFlagship);

void BM_PieceOracleFlagship(benchmark::State& state) {
  const Presentation g = r_l_presentation(8);
  for (auto _ : state) benchmark::DoNotOptimize(piece_oracle(g).max_piece);
}
BENCHMARK(BM_PieceOracleFlagship);

void BM_MaxPieceRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Presentation torus = mapping_torus(random_endomorphism(2, n, 5));
  for (auto _ : state) benchmark::DoNotOptimize(max_piece(torus).max_piece);
}
BENCHMARK(BM_MaxPieceRandom)->Arg(100)->Arg(400)->Arg(1600);

void BM_NpcCheckFlagship(benchmark::State& state) {
  const Presentation q = template_squarify(t_rewrite(r_l_presentation(8))).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(npc_check(q).pass);
}
BENCHMARK(BM_NpcCheckFlagship);

void BM_SquarifySearchPhi(benchmark::State& state) {
  const Presentation torus = mapping_torus(phi());
  for (auto _ : state) benchmark::DoNotOptimize(general_squarify_search(torus).leaves);
}
BENCHMARK(BM_SquarifySearchPhi)->Unit(benchmark::kMillisecond);

void BM_PeriodicSearchPhi(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_conjugacy_search(phi(), len, 2));
}
BENCHMARK(BM_PeriodicSearchPhi)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BnsSweepFlagship(benchmark::State& state) {
  const Presentation g = r_l_presentation(8);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(g, 5).size());
}
BENCHMARK(BM_BnsSweepFlagship);

void BM_PrefixScan(benchmark::State& state) {
  for (auto _ : state) {
    FixedWordStream s(phi(), gen_letter(0));
    benchmark::DoNotOptimize(prefix_exponent_scan(s, 15625, 0).min);
  }
}
BENCHMARK(BM_PrefixScan);

}  // namespace

BENCHMARK_MAIN();
