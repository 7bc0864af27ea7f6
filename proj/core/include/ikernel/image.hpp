#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ikernel {

using Sample = std::uint16_t;

/// Row-major, channel-interleaved raster of intensities in [0, ceiling].
///
/// channels is 1 (gray) or 3 (RGB); ceiling fits the 16-bit netpbm range.
class Image {
 public:
  Image() = default;
  /// Zero-filled image.
  Image(std::uint32_t width, std::uint32_t height, unsigned channels, Sample ceiling);
  /// Takes ownership of `samples`; validates size and range.
  Image(std::uint32_t width, std::uint32_t height, unsigned channels, Sample ceiling,
        std::vector<Sample> samples);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  unsigned channels() const noexcept { return channels_; }
  Sample ceiling() const noexcept { return ceiling_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * height_;
  }
  std::size_t sample_count() const noexcept { return pixel_count() * channels_; }

  std::span<const Sample> samples() const noexcept { return samples_; }
  std::span<Sample> samples() noexcept { return samples_; }

  Sample at(std::uint32_t x, std::uint32_t y, unsigned c = 0) const noexcept {
    return samples_[index(x, y, c)];
  }
  Sample& at(std::uint32_t x, std::uint32_t y, unsigned c = 0) noexcept {
    return samples_[index(x, y, c)];
  }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_ && ceiling_ == other.ceiling_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t index(std::uint32_t x, std::uint32_t y, unsigned c) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  unsigned channels_ = 1;
  Sample ceiling_ = 1;
  std::vector<Sample> samples_;
};

/// Every intensity x becomes ceiling - x.
Image invert_image(const Image& img);

}  // namespace ikernel
