// Parallel kernels against the serial reference versions.

#include <benchmark/benchmark.h>

#include <random>

#include "ssprop/conv.hpp"
#include "ssprop/reference.hpp"
#include "ssprop/sparsify.hpp"
#include "ssprop/tensor.hpp"

using namespace ssprop;

namespace {

Matrix<float> random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> u(-1, 1);
  Matrix<float> m(r, c);
  for (auto& v : m.values()) v = u(rng);
  return m;
}

Tensor4<float> random_tensor(Dims4 d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> u(-1, 1);
  Tensor4<float> t(d);
  for (auto& v : t.values()) v = u(rng);
  return t;
}

// A mid-network conv: 32 -> 64 channels on 14x14 maps, batch 16.
struct ConvCase {
  ConvLayer<float> layer = ConvLayer<float>::zeros(32, 64, {3, 1, 1});
  Tensor4<float> x = random_tensor({16, 32, 14, 14}, 2);
  Tensor4<float> gy = random_tensor({16, 64, 14, 14}, 3);
  ConvCase() { layer.weights = random_tensor(layer.weights.dims(), 1); }
};

void BM_MatmulParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
  state.SetItemsProcessed(state.iterations() * 2 * n * n * n);
}

void BM_MatmulReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::matmul(a, b));
  state.SetItemsProcessed(state.iterations() * 2 * n * n * n);
}

void BM_ConvForwardParallel(benchmark::State& state) {
  const ConvCase c;
  for (auto _ : state) benchmark::DoNotOptimize(conv_forward(c.layer, c.x));
}

void BM_ConvForwardReference(benchmark::State& state) {
  const ConvCase c;
  for (auto _ : state) benchmark::DoNotOptimize(reference::conv_forward(c.layer, c.x));
}

void BM_ConvBackwardParallel(benchmark::State& state) {
  const ConvCase c;
  for (auto _ : state) benchmark::DoNotOptimize(conv_backward_dense(c.layer, c.x, c.gy));
}

void BM_ConvBackwardReference(benchmark::State& state) {
  const ConvCase c;
  for (auto _ : state) benchmark::DoNotOptimize(reference::conv_backward(c.layer, c.x, c.gy));
}

// Sparse backward at drop rate range(0)/10.
void BM_ConvBackwardSparse(benchmark::State& state) {
  const ConvCase c;
  const SparsifyPolicy policy{SparsifyMode::channel, double(state.range(0)) / 10.0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(sparse_conv_backward(c.layer, c.x, c.gy, policy));
}

}  // namespace

BENCHMARK(BM_MatmulParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_MatmulReference)->Arg(64)->Arg(256);
BENCHMARK(BM_ConvForwardParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvForwardReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardSparse)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
