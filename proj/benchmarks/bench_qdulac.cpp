#include <benchmark/benchmark.h>

#include <random>

#include "qdulac/expand.hpp"
#include "qdulac/parser.hpp"
#include "qdulac/roots.hpp"

using namespace qdulac;

namespace {

const char* const kWorked = "-a3*x*y^3 + a3*x*y^2 - a4*x^2*y^3 - a4*x^2*y^2"
                           " + S^2(y)*y^2 - (3/2)*S(y)^2*y - S^2(y)*y + (1/2)*S(y)^2 = 0";

QPolynomial worked() { return parse_equation(kWorked, {"a3", "a4"}); }

void expand_worked(benchmark::State& state, Rat q) {
  const auto f = worked();
  const Rat k_max(state.range(0));
  const auto face = faces_for_x_to_zero(build_polygon(support(f)))[1];
  const auto ts = TruncatedSolution::make(f, face, ParamPoly(-1), Rat(0), q, Provenance::edge_root);
  for (auto _ : state) benchmark::DoNotOptimize(expand_solution(f, ts, q, k_max));
}

void BM_ExpandHalf(benchmark::State& state) { expand_worked(state, Rat(1, 2)); }
void BM_ExpandQuarter(benchmark::State& state) { expand_worked(state, Rat(1, 4)); }

void BM_Hull(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 6);
  PointSet pts;
  while (pts.size() < static_cast<std::size_t>(state.range(0))) pts.insert(Point{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))});
  for (auto _ : state) benchmark::DoNotOptimize(build_polygon(pts));
  state.SetComplexityN(state.range(0));
}

void BM_RationalRoots(benchmark::State& state) {
  // prod (j x - 1) for j = 1..n
  std::vector<Rat> p{Rat(1)};
  for (long j = 1; j <= state.range(0); ++j) {
    std::vector<Rat> next(p.size() + 1, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] -= p[i];
      next[i + 1] += Rat(j) * p[i];
    }
    p = std::move(next);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rational_roots(p));
}

} // namespace

BENCHMARK(BM_ExpandHalf)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandQuarter)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hull)->RangeMultiplier(4)->Range(8, 512)->Complexity();
BENCHMARK(BM_RationalRoots)->DenseRange(2, 10, 4);
BENCHMARK_MAIN();
