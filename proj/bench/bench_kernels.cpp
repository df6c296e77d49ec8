// Optimized kernels against the naive references in tests/oracles, on
// MNIST-sized inputs. Run with OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "r2n/gp_pooling.hpp"
#include "r2n/layers.hpp"
#include "r2n/models.hpp"
#include "r2n/warp.hpp"

using namespace r2n;

namespace {

Tensor noise(const Shape& shape, std::uint64_t seed) {
  Rng rng(seed);
  Tensor t(shape);
  for (auto& v : t.data()) v = static_cast<Real>(rng.uniform(0, 1));
  return t;
}

std::vector<double> angles(std::size_t n) {
  Rng rng(7);
  std::vector<double> t(n);
  for (auto& v : t) v = rng.uniform(-std::numbers::pi / 2, std::numbers::pi / 2);
  return t;
}

// batch x 16 x 28 x 28, the first conv block's output
Shape feature_shape(const benchmark::State& state) { return {static_cast<std::size_t>(state.range(0)), 16, 28, 28}; }

void BM_Conv2d(benchmark::State& state) {
  Conv2d conv("conv", 16, 32, 3);
  Rng rng(1);
  conv.init(rng);
  const Tensor x = noise(feature_shape(state), 2);
  for (auto _ : state) benchmark::DoNotOptimize(conv.forward(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Conv2dReference(benchmark::State& state) {
  Conv2d conv("conv", 16, 32, 3);
  Rng rng(1);
  conv.init(rng);
  const Tensor x = noise(feature_shape(state), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::conv2d_direct(x, conv.weight().value, conv.bias().value, 1, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MaxPool(benchmark::State& state) {
  MaxPool2d pool;
  const Tensor x = noise(feature_shape(state), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pool.forward(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MaxPoolReference(benchmark::State& state) {
  const Tensor x = noise(feature_shape(state), 3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::maxpool_direct(x, 2, 2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GpPool(benchmark::State& state) {
  GpPool gp(default_gp_spec());
  const Tensor x = noise(feature_shape(state), 4);
  gp.forward(x);  // binning is planned once per input size
  for (auto _ : state) benchmark::DoNotOptimize(gp.forward(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GpPoolReference(benchmark::State& state) {
  const Tensor x = noise(feature_shape(state), 4);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::gp_pool_reference(x, default_gp_spec()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Rotate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Tensor x = noise({n, 1, 28, 28}, 5);
  const auto t = angles(n);
  RotationWarp warp;
  for (auto _ : state) benchmark::DoNotOptimize(warp.forward(x, t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RotateReference(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Tensor x = noise({n, 1, 28, 28}, 5);
  const auto t = angles(n);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::rotate_direct(x, t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Conv2d)->Arg(8)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Conv2dReference)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxPool)->Arg(8)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxPoolReference)->Arg(8)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GpPool)->Arg(8)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GpPoolReference)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rotate)->Arg(8)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RotateReference)->Arg(8)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
