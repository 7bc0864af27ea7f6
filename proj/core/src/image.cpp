#include "ikernel/image.hpp"

#include <algorithm>

#include "ikernel/error.hpp"

namespace ikernel {
namespace {

void validate_shape(std::uint32_t width, std::uint32_t height, unsigned channels,
                    Sample ceiling) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("image dimensions must be >= 1");
  }
  if (channels != 1 && channels != 3) {
    throw InvalidArgument("image must have 1 or 3 channels");
  }
  if (ceiling == 0) {
    throw InvalidArgument("intensity ceiling must be >= 1");
  }
}

}  // namespace

Image::Image(std::uint32_t width, std::uint32_t height, unsigned channels, Sample ceiling)
    : width_(width), height_(height), channels_(channels), ceiling_(ceiling) {
  validate_shape(width, height, channels, ceiling);
  samples_.assign(sample_count(), 0);
}

Image::Image(std::uint32_t width, std::uint32_t height, unsigned channels, Sample ceiling,
             std::vector<Sample> samples)
    : width_(width),
      height_(height),
      channels_(channels),
      ceiling_(ceiling),
      samples_(std::move(samples)) {
  validate_shape(width, height, channels, ceiling);
  if (samples_.size() != sample_count()) {
    throw InvalidArgument("sample count does not match image shape");
  }
  if (std::any_of(samples_.begin(), samples_.end(),
                  [ceiling](Sample s) { return s > ceiling; })) {
    throw InvalidArgument("sample exceeds intensity ceiling");
  }
}

Image invert_image(const Image& img) {
  Image out = img;
  const Sample ceiling = img.ceiling();
  for (Sample& s : out.samples()) {
    s = static_cast<Sample>(ceiling - s);
  }
  return out;
}

}  // namespace ikernel
