#include <benchmark/benchmark.h>

#include <random>

#include "ikernel/image_kernel.hpp"
#include "ikernel/oracle.hpp"
#include "ikernel/prng.hpp"

using namespace ikernel;

namespace {

Image noise_image(std::uint32_t side, unsigned channels, Sample ceiling) {
  std::mt19937_64 rng(side);
  std::uniform_int_distribution<unsigned> dist(0, ceiling);
  std::vector<Sample> samples(static_cast<std::size_t>(side) * side * channels);
  for (auto& s : samples) {
    s = static_cast<Sample>(dist(rng));
  }
  return Image(side, side, channels, ceiling, std::move(samples));
}

}  // namespace

static void bm_stream_next_value(benchmark::State& state) {
  const UniformRange range(static_cast<std::uint64_t>(state.range(0)));
  Stream s(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(range(s));
  }
}
BENCHMARK(bm_stream_next_value)->Arg(255)->Arg(254)->Arg(65535);

static void bm_kernel_bit(benchmark::State& state) {
  const Image img = noise_image(static_cast<std::uint32_t>(state.range(0)), 1, 255);
  const auto params = KernelParams::for_image(img, 1 << 20, 0);
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_bit(img, params, i++ % params.bits));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.sample_count()));
}
BENCHMARK(bm_kernel_bit)->Arg(16)->Arg(64);

static void bm_build_kernel(benchmark::State& state) {
  const Image img = noise_image(64, 1, 255);
  const auto params = KernelParams::for_image(img, static_cast<std::uint64_t>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_kernel(img, params));
  }
}
BENCHMARK(bm_build_kernel)->Arg(4096)->Unit(benchmark::kMillisecond);

static void bm_similarity(benchmark::State& state) {
  KernelParams params;
  params.bits = static_cast<std::uint64_t>(state.range(0));
  Kernel a{params, BitVector(params.bits), false};
  Kernel b{params, BitVector(params.bits), false};
  std::mt19937_64 rng(1);
  for (std::uint64_t i = 0; i < params.bits; ++i) {
    a.bits.set(i, rng() & 1U);
    b.bits.set(i, rng() & 1U);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(similarity(a, b));
  }
}
BENCHMARK(bm_similarity)->Arg(60000)->Arg(1 << 20);

static void bm_exact_kernel(benchmark::State& state) {
  const oracle::BitString s(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::exact_kernel(s));
  }
}
BENCHMARK(bm_exact_kernel)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
