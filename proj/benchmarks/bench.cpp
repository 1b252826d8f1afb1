#include <benchmark/benchmark.h>

#include "ppart/hamsandwich.hpp"
#include "ppart/incidence.hpp"
#include "ppart/rng.hpp"
#include "ppart/veronese.hpp"

namespace {

using namespace ppart;

PointSet random_points(int dim, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  PointSet ps;
  ps.dimension = dim;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (int j = 0; j < dim; ++j)
      p.coordinates.push_back(Rat(Int(rng.range(-100, 100))));
    ps.points.push_back(std::move(p));
  }
  return ps;
}

void BM_hilbert_rank(benchmark::State& state) {
  const auto ps = random_points(2, static_cast<std::size_t>(state.range(0)), 1);
  const int ell = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(hilbert_from_points(ps, ell).value);
}
BENCHMARK(BM_hilbert_rank)->Args({50, 3})->Args({100, 4})->Args({200, 5});

void BM_bisect(benchmark::State& state) {
  Rng rng(3);
  BisectionProblem pb;
  const int n = 4;
  pb.lifted_dimension = n;
  for (int s = 0; s < 3; ++s) {
    std::vector<std::vector<Rat>> set;
    for (long long q = 0; q < state.range(0); ++q) {
      std::vector<Rat> v;
      for (int j = 0; j < n; ++j) v.push_back(Rat(Int(rng.range(-50, 50))));
      set.push_back(std::move(v));
    }
    pb.sets.push_back(std::move(set));
  }
  for (auto _ : state) benchmark::DoNotOptimize(bisect(pb).coefficients);
}
BENCHMARK(BM_bisect)->Arg(9)->Arg(25)->Arg(51);

void BM_count_incidences(benchmark::State& state) {
  const auto inst =
      generate("grid_lines_2d", {{"q", state.range(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(count_incidences(inst));
}
BENCHMARK(BM_count_incidences)->Arg(10)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
