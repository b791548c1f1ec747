#include "hilbert/asymptotics.hpp"

#include <benchmark/benchmark.h>

using namespace hilbert;

namespace {

const ConvexBody& ellipse() {
  static const ConvexBody body = make_ellipse(2.0, 1.0);
  return body;
}

void BM_RayExit(benchmark::State& state) {
  const Vec p = vec2(0.3, -0.2);
  const Vec dir = vec2(0.6, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(ellipse().ray_exit(p, dir));
}
BENCHMARK(BM_RayExit);

void BM_HilbertDistance(benchmark::State& state) {
  const MetricQuery q{ellipse()};
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_distance(q, vec2(0.1, 0.2), vec2(-1.5, 0.3)));
}
BENCHMARK(BM_HilbertDistance);

void BM_BusemannDensity(benchmark::State& state) {
  const MetricQuery q{ellipse()};
  for (auto _ : state) benchmark::DoNotOptimize(busemann_density(q, vec2(1.9, 0.05)));
}
BENCHMARK(BM_BusemannDensity);

void BM_SphereArea(benchmark::State& state) {
  const MetricQuery q{ellipse()};
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_area(q, t));
}
BENCHMARK(BM_SphereArea)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BallVolumePolar(benchmark::State& state) {
  const MetricQuery q{ellipse()};
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball_volume_polar(q, t));
}
BENCHMARK(BM_BallVolumePolar)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
