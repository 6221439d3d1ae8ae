#include <benchmark/benchmark.h>

#include <random>

#include "tq/dsl.hpp"
#include "tq/matrix.hpp"
#include "tq/rep.hpp"
#include "tq/resolution.hpp"
#include "tq/serre.hpp"
#include "tq/threads.hpp"

using namespace tq;

namespace {

const char* kFigure = R"(vertex v1 v2 v3 v4 v5
arrow a: v1 -> v2
arrow b: v1 -> v5
arrow c: v2 -> v5
thread s: v2 ..> v5 [Z]
thread t: v3 ..> v2 [3]
thread u: v3 ..> v4 []
)";

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, 9);
  return m;
}

void BM_Rank(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

void BM_RankModP(benchmark::State& state) {
  FieldScope f(Field::prime(1000003));
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankModP)->Arg(16)->Arg(32)->Arg(64);

void BM_Expand(benchmark::State& state) {
  const ThreadQuiver tq = parse_tq(kFigure);
  for (auto _ : state) benchmark::DoNotOptimize(expand(tq, static_cast<int>(state.range(0))).category());
}
BENCHMARK(BM_Expand)->Arg(1)->Arg(2)->Arg(3);

void BM_HomDim(benchmark::State& state) {
  CategoryPtr c = expand(parse_tq(kFigure), 2).category();
  std::mt19937_64 rng(2);
  const Rep m = random_rep(c, rng), n = random_rep(c, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(m, n));
}
BENCHMARK(BM_HomDim);

void BM_Resolution(benchmark::State& state) {
  CategoryPtr c = expand(parse_tq(kFigure), 2).category();
  std::vector<Rep> simples;
  for (int v = 0; v < c->size(); ++v) simples.push_back(std_module(c, v, ModuleKind::Simple));
  for (auto _ : state)
    for (const auto& s : simples) benchmark::DoNotOptimize(projective_resolution(s, 8).length());
}
BENCHMARK(BM_Resolution);

void BM_Dualizing(benchmark::State& state) {
  CategoryPtr c = expand(parse_tq(kFigure), static_cast<int>(state.range(0))).category();
  for (auto _ : state) benchmark::DoNotOptimize(check_dualizing(c).passed());
}
BENCHMARK(BM_Dualizing)->Arg(1)->Arg(2);

void BM_WindowIso(benchmark::State& state) {
  const Window a = expand(parse_tq("vertex a b\nthread t: a ..> b [1]\n"), 2);
  const Window b = expand(parse_tq("vertex a b c\nthread s: a ..> b []\nthread t: b ..> c []\n"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(window_iso(a, b).has_value());
}
BENCHMARK(BM_WindowIso);

}  // namespace

BENCHMARK_MAIN();
