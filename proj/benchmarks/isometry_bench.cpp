#include <benchmark/benchmark.h>

#include "busekit/induced.hpp"

using namespace busekit;

namespace {

const SpaceDescriptor kH2 = SpaceDescriptor::hyperbolic_plane();

void BM_ClassifyMoebius(benchmark::State& state) {
  const auto f = verify_isometry(kH2, IsometrySpec::moebius(2, 1, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(classify(f).displacement);
}
BENCHMARK(BM_ClassifyMoebius);

void BM_ClassifyAffine(benchmark::State& state) {
  const auto s = SpaceDescriptor::lp(4, 3.0);
  const auto f = verify_isometry(
      s, IsometrySpec::affine({{0, 1, 0, 0}, {0, 0, -1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}, {1, 2, 3, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(classify(f).displacement);
}
BENCHMARK(BM_ClassifyAffine);

void BM_SearchFallback(benchmark::State& state) {
  const auto f = verify_isometry(kH2, IsometrySpec::moebius(2, 1, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_displacement_search(f).value);
}
BENCHMARK(BM_SearchFallback)->Unit(benchmark::kMillisecond);

void BM_VerifyIsometry(benchmark::State& state) {
  const auto spec = IsometrySpec::moebius(2, 1, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_isometry(kH2, spec).verified());
}
BENCHMARK(BM_VerifyIsometry)->Unit(benchmark::kMicrosecond);

void BM_InducedPair(benchmark::State& state) {
  const auto s = SpaceDescriptor::product({kH2, SpaceDescriptor::real_line()});
  const auto omega =
      make_line(s, Point{0, 1, 0}, DirectionSpec::Weighted{{0, 1}, {std::vector<double>{}, std::vector<double>{1}}});
  const auto g = verify_isometry(
      s, IsometrySpec::pair({IsometrySpec::moebius(2, 0, 0, 0.5), IsometrySpec::affine({{1}}, {1})}));
  for (auto _ : state) benchmark::DoNotOptimize(classify_induced_pair(omega, g).verdict);
}
BENCHMARK(BM_InducedPair)->Unit(benchmark::kMicrosecond);

}  // namespace
