#pragma once

// Sampled information kernels for images.
//
// Bit i of a kernel draws a pseudorandom plane from substream i of the seed,
// pairs it with its inversion (ceiling - plane), and records 1 when the image
// lies strictly closer (in L1) to the plane than to the inversion.

#include <cstdint>
#include <vector>

#include "ikernel/bit_vector.hpp"
#include "ikernel/image.hpp"
#include "ikernel/similarity.hpp"

namespace ikernel {

inline constexpr std::uint64_t kDefaultKernelBits = 60000;
inline constexpr std::uint64_t kDefaultSeed = 0;

/// Everything that must agree for two kernels to be comparable.
struct KernelParams {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t bits = kDefaultKernelBits;
  Sample ceiling = 255;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  unsigned channels = 1;

  static KernelParams for_image(const Image& img, std::uint64_t bits = kDefaultKernelBits,
                                std::uint64_t seed = kDefaultSeed) noexcept;

  bool matches(const Image& img) const noexcept;

  friend bool operator==(const KernelParams&, const KernelParams&) = default;
};

struct Kernel {
  KernelParams params;
  BitVector bits;
  bool is_template = false;

  friend bool operator==(const Kernel&, const Kernel&) = default;
};

/// L1 distances from an image to one plane and to its inversion.
struct BitDeviations {
  std::uint64_t to_plane = 0;
  std::uint64_t to_inverse = 0;

  bool tie() const noexcept { return to_plane == to_inverse; }
  bool bit() const noexcept { return to_plane < to_inverse; }
};

struct BuildOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Plane for kernel bit `bit_index`, shaped like the params' image.
Image generate_plane(const KernelParams& params, std::uint64_t bit_index);

/// Sum of absolute sample differences. Throws InvalidArgument on shape mismatch.
std::uint64_t deviation(const Image& img, const Image& plane);

BitDeviations bit_deviations(const Image& img, const KernelParams& params,
                             std::uint64_t bit_index);

/// 1 iff the image is strictly closer to plane `bit_index` than to its
/// inversion; ties give 0.
bool kernel_bit(const Image& img, const KernelParams& params, std::uint64_t bit_index);

/// All params.bits bits. Output is identical for every worker count.
Kernel build_kernel(const Image& img, const KernelParams& params,
                    const BuildOptions& options = {});

/// Per-bit deviations for every kernel bit (diagnostic mode).
std::vector<BitDeviations> kernel_deviations(const Image& img, const KernelParams& params,
                                             const BuildOptions& options = {});

/// Agreeing bits. Throws IncomparableError unless every param matches.
SimilarityResult similarity(const Kernel& a, const Kernel& b);

}  // namespace ikernel
