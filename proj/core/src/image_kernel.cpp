#include "ikernel/image_kernel.hpp"

#include <algorithm>
#include <thread>

#include "ikernel/error.hpp"
#include "ikernel/prng.hpp"

namespace ikernel {
namespace {

void require_match(const Image& img, const KernelParams& params) {
  if (!params.matches(img)) {
    throw InvalidArgument("image shape does not match kernel parameters");
  }
}

void require_bits(const KernelParams& params) {
  if (params.bits == 0) {
    throw InvalidArgument("kernel length must be >= 1");
  }
}

// Draws the plane on the fly instead of materializing it; the draw order is
// exactly generate_plane's sample order.
BitDeviations deviations_for(std::span<const Sample> samples, const UniformRange& range,
                             std::uint64_t seed, std::uint64_t bit_index) {
  Stream stream = Stream::derive(seed, bit_index);
  const auto ceiling = static_cast<std::int64_t>(range.ceiling());
  std::uint64_t to_plane = 0;
  std::uint64_t to_inverse = 0;
  for (const Sample a : samples) {
    const auto x = static_cast<std::int64_t>(range(stream));
    const std::int64_t d1 = a - x;
    const std::int64_t d2 = a - (ceiling - x);
    to_plane += static_cast<std::uint64_t>(d1 < 0 ? -d1 : d1);
    to_inverse += static_cast<std::uint64_t>(d2 < 0 ? -d2 : d2);
  }
  return {to_plane, to_inverse};
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs fn(first, last) over [0, count) split into contiguous chunks whose
// boundaries are multiples of `grain`.
template <typename Fn>
void parallel_ranges(std::uint64_t count, std::uint64_t grain, unsigned workers, Fn fn) {
  const std::uint64_t grains = (count + grain - 1) / grain;
  const std::uint64_t used = std::min<std::uint64_t>(workers, grains);
  if (used <= 1) {
    fn(std::uint64_t{0}, count);
    return;
  }
  const std::uint64_t per_worker = (grains + used - 1) / used;
  std::vector<std::jthread> threads;
  threads.reserve(used);
  for (std::uint64_t w = 0; w < used; ++w) {
    const std::uint64_t first = std::min(count, w * per_worker * grain);
    const std::uint64_t last = std::min(count, (w + 1) * per_worker * grain);
    if (first < last) {
      threads.emplace_back([&fn, first, last] { fn(first, last); });
    }
  }
}

}  // namespace

KernelParams KernelParams::for_image(const Image& img, std::uint64_t bits,
                                     std::uint64_t seed) noexcept {
  return {seed, bits, img.ceiling(), img.width(), img.height(), img.channels()};
}

bool KernelParams::matches(const Image& img) const noexcept {
  return ceiling == img.ceiling() && width == img.width() && height == img.height() &&
         channels == img.channels();
}

Image generate_plane(const KernelParams& params, std::uint64_t bit_index) {
  if (bit_index >= params.bits) {
    throw InvalidArgument("bit index out of range");
  }
  Image plane(params.width, params.height, params.channels, params.ceiling);
  const UniformRange range(params.ceiling);
  Stream stream = Stream::derive(params.seed, bit_index);
  for (Sample& s : plane.samples()) {
    s = static_cast<Sample>(range(stream));
  }
  return plane;
}

std::uint64_t deviation(const Image& img, const Image& plane) {
  if (!img.same_shape(plane)) {
    throw InvalidArgument("image and plane shapes differ");
  }
  std::uint64_t total = 0;
  const auto a = img.samples();
  const auto b = plane.samples();
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  }
  return total;
}

BitDeviations bit_deviations(const Image& img, const KernelParams& params,
                             std::uint64_t bit_index) {
  require_match(img, params);
  if (bit_index >= params.bits) {
    throw InvalidArgument("bit index out of range");
  }
  return deviations_for(img.samples(), UniformRange(params.ceiling), params.seed, bit_index);
}

bool kernel_bit(const Image& img, const KernelParams& params, std::uint64_t bit_index) {
  return bit_deviations(img, params, bit_index).bit();
}

Kernel build_kernel(const Image& img, const KernelParams& params,
                    const BuildOptions& options) {
  require_match(img, params);
  require_bits(params);
  Kernel kernel{params, BitVector(params.bits), false};
  const UniformRange range(params.ceiling);
  const auto samples = img.samples();
  auto words = kernel.bits.words();

  // Chunks are whole words, so no two workers ever touch the same word.
  parallel_ranges(params.bits, BitVector::kWordBits, resolve_workers(options.workers),
                  [&](std::uint64_t first, std::uint64_t last) {
                    for (std::uint64_t i = first; i < last; ++i) {
                      if (deviations_for(samples, range, params.seed, i).bit()) {
                        words[i / BitVector::kWordBits] |= BitVector::Word{1}
                                                           << (i % BitVector::kWordBits);
                      }
                    }
                  });
  return kernel;
}

std::vector<BitDeviations> kernel_deviations(const Image& img, const KernelParams& params,
                                             const BuildOptions& options) {
  require_match(img, params);
  require_bits(params);
  std::vector<BitDeviations> out(params.bits);
  const UniformRange range(params.ceiling);
  const auto samples = img.samples();
  parallel_ranges(params.bits, 1, resolve_workers(options.workers),
                  [&](std::uint64_t first, std::uint64_t last) {
                    for (std::uint64_t i = first; i < last; ++i) {
                      out[i] = deviations_for(samples, range, params.seed, i);
                    }
                  });
  return out;
}

SimilarityResult similarity(const Kernel& a, const Kernel& b) {
  if (a.params != b.params || a.bits.size() != b.bits.size()) {
    throw IncomparableError("incomparable kernels");
  }
  return {a.bits.agreements(b.bits), a.bits.size()};
}

}  // namespace ikernel
