#pragma once

// Deterministic image transformations used to probe kernel robustness.
//
// Every point operation rounds half away from zero and then clamps to
// [0, ceiling]. Geometric operations sample bilinearly about the image
// centre and fill exposed area with 0.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ikernel/image.hpp"
#include "ikernel/image_kernel.hpp"

namespace ikernel {

enum class TransformKind {
  identity,
  brightness,
  contrast,
  saturation,
  color_balance,
  noise,
  scale,
  rotate,
  shift,
  invert,
};

enum class Channel : unsigned { red = 0, green = 1, blue = 2 };

/// One transformation. `magnitude` is a percentage, or degrees for rotate.
///
/// Accepted magnitudes: brightness, contrast, saturation, color_balance and
/// shift in [-100, 100]; noise in [0, 100]; scale in (-100, 1000];
/// rotate in [-360, 360].
struct TransformSpec {
  TransformKind kind = TransformKind::identity;
  double magnitude = 0.0;
  std::uint64_t noise_seed = 1;
  Channel channel = Channel::red;

  friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

Image adjust_brightness(const Image& img, double percent);
Image adjust_contrast(const Image& img, double percent);
/// RGB only.
Image adjust_saturation(const Image& img, double percent);
/// RGB only; scales one channel.
Image color_balance(const Image& img, Channel channel, double percent);
/// Replaces roughly `percent` of pixels (all channels) with uniform noise
/// drawn from substream 0 of `noise_seed`.
Image add_noise(const Image& img, double percent, std::uint64_t noise_seed);
/// Magnifies by 1 + percent/100 about the centre, cropped to the input size.
Image scale(const Image& img, double percent);
/// Rotates counter-clockwise (as displayed) about the centre.
Image rotate(const Image& img, double degrees);
/// Translates right/down by round(percent * size / 100) pixels.
Image shift(const Image& img, double percent);

/// Bilinear resampling to a new canvas (pixel-centre aligned).
Image resize_bilinear(const Image& img, std::uint32_t width, std::uint32_t height);

Image apply(const Image& img, const TransformSpec& spec);

/// Short human-readable label, e.g. "noise 20%".
std::string describe(const TransformSpec& spec);

/// Parses "kind:magnitude" or "color_balance:<R|G|B>:magnitude"; "identity"
/// and "invert" take no magnitude.
TransformSpec parse_transform(std::string_view text);

/// The eight robustness rows (contrast, saturation, color balance, noise,
/// brightness, scale, rotate, shift). Colour-only rows are omitted for
/// single-channel images.
std::vector<TransformSpec> default_suite(unsigned channels, std::uint64_t noise_seed = 1);

struct BenchRow {
  TransformSpec spec;
  std::string name;
  SimilarityResult similarity;
};

/// Similarity between the kernel of `img` and the kernel of each transformed
/// copy, sorted by descending similarity (suite order among equals).
std::vector<BenchRow> bench_transforms(const Image& img, const KernelParams& params,
                                       const std::vector<TransformSpec>& suite,
                                       const BuildOptions& options = {});

}  // namespace ikernel
