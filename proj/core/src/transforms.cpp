#include "ikernel/transforms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "ikernel/error.hpp"
#include "ikernel/prng.hpp"

namespace ikernel {
namespace {

constexpr double kEdgeTolerance = 1e-9;

Sample round_clamp(double value, Sample ceiling) {
  const double r = std::round(value);
  if (!(r > 0.0)) {
    return 0;
  }
  if (r >= ceiling) {
    return ceiling;
  }
  return static_cast<Sample>(r);
}

void require_range(double value, double lo, double hi, const char* what) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream msg;
    msg << what << " magnitude " << value << " outside [" << lo << ", " << hi << "]";
    throw InvalidArgument(msg.str());
  }
}

void require_rgb(const Image& img, const char* what) {
  if (img.channels() != 3) {
    throw InvalidArgument(std::string(what) + " requires an RGB image");
  }
}

template <typename Fn>
Image map_samples(const Image& img, Fn fn) {
  Image out = img;
  for (Sample& s : out.samples()) {
    s = round_clamp(fn(static_cast<double>(s)), img.ceiling());
  }
  return out;
}

// Bilinear sample at fractional source coordinates; nullopt outside the
// image (beyond a rounding tolerance).
std::optional<double> bilinear(const Image& img, double sx, double sy, unsigned c) {
  const double max_x = img.width() - 1.0;
  const double max_y = img.height() - 1.0;
  if (sx < -kEdgeTolerance || sy < -kEdgeTolerance || sx > max_x + kEdgeTolerance ||
      sy > max_y + kEdgeTolerance) {
    return std::nullopt;
  }
  sx = std::clamp(sx, 0.0, max_x);
  sy = std::clamp(sy, 0.0, max_y);
  const auto x0 = static_cast<std::uint32_t>(std::floor(sx));
  const auto y0 = static_cast<std::uint32_t>(std::floor(sy));
  const std::uint32_t x1 = std::min(x0 + 1, img.width() - 1);
  const std::uint32_t y1 = std::min(y0 + 1, img.height() - 1);
  const double tx = sx - x0;
  const double ty = sy - y0;
  const double top = img.at(x0, y0, c) * (1.0 - tx) + img.at(x1, y0, c) * tx;
  const double bottom = img.at(x0, y1, c) * (1.0 - tx) + img.at(x1, y1, c) * tx;
  return top * (1.0 - ty) + bottom * ty;
}

// Builds an image whose pixel (x, y) samples the source at map(x, y).
template <typename Map>
Image resample(const Image& img, std::uint32_t width, std::uint32_t height, Map map) {
  Image out(width, height, img.channels(), img.ceiling());
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const auto [sx, sy] = map(x, y);
      for (unsigned c = 0; c < img.channels(); ++c) {
        const auto v = bilinear(img, sx, sy, c);
        out.at(x, y, c) = v ? round_clamp(*v, img.ceiling()) : Sample{0};
      }
    }
  }
  return out;
}

std::string_view kind_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::identity: return "identity";
    case TransformKind::brightness: return "brightness";
    case TransformKind::contrast: return "contrast";
    case TransformKind::saturation: return "saturation";
    case TransformKind::color_balance: return "color_balance";
    case TransformKind::noise: return "noise";
    case TransformKind::scale: return "scale";
    case TransformKind::rotate: return "rotate";
    case TransformKind::shift: return "shift";
    case TransformKind::invert: return "invert";
  }
  return "unknown";
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw InvalidArgument("bad transform magnitude '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Image adjust_brightness(const Image& img, double percent) {
  require_range(percent, -100.0, 100.0, "brightness");
  const double offset = percent * img.ceiling() / 100.0;
  return map_samples(img, [offset](double x) { return x + offset; });
}

Image adjust_contrast(const Image& img, double percent) {
  require_range(percent, -100.0, 100.0, "contrast");
  const double ceiling = img.ceiling();
  // (x - C/2)(1 + p/100) + C/2, scaled by 200 so integer inputs stay exact.
  return map_samples(img, [ceiling, percent](double x) {
    return ((2.0 * x - ceiling) * (100.0 + percent) + 100.0 * ceiling) / 200.0;
  });
}

Image adjust_saturation(const Image& img, double percent) {
  require_rgb(img, "saturation");
  require_range(percent, -100.0, 100.0, "saturation");
  Image out = img;
  auto samples = out.samples();
  for (std::size_t p = 0; p < img.pixel_count(); ++p) {
    Sample* px = &samples[p * 3];
    const double luma = std::round((px[0] + px[1] + px[2]) / 3.0);
    for (int c = 0; c < 3; ++c) {
      px[c] = round_clamp((100.0 * luma + (px[c] - luma) * (100.0 + percent)) / 100.0,
                          img.ceiling());
    }
  }
  return out;
}

Image color_balance(const Image& img, Channel channel, double percent) {
  require_rgb(img, "color balance");
  require_range(percent, -100.0, 100.0, "color balance");
  Image out = img;
  auto samples = out.samples();
  const auto c = static_cast<std::size_t>(channel);
  for (std::size_t p = 0; p < img.pixel_count(); ++p) {
    Sample& s = samples[p * 3 + c];
    s = round_clamp(s * (100.0 + percent) / 100.0, img.ceiling());
  }
  return out;
}

Image add_noise(const Image& img, double percent, std::uint64_t noise_seed) {
  require_range(percent, 0.0, 100.0, "noise");
  Image out = img;
  auto samples = out.samples();
  Stream stream = Stream::derive(noise_seed, 0);
  const UniformRange coin(9999);
  const UniformRange value(img.ceiling());
  const double threshold = 100.0 * percent;
  const unsigned channels = img.channels();
  for (std::size_t p = 0; p < img.pixel_count(); ++p) {
    if (static_cast<double>(coin(stream)) < threshold) {
      for (unsigned c = 0; c < channels; ++c) {
        samples[p * channels + c] = static_cast<Sample>(value(stream));
      }
    }
  }
  return out;
}

Image scale(const Image& img, double percent) {
  if (!(percent > -100.0 && percent <= 1000.0)) {
    throw InvalidArgument("scale magnitude must lie in (-100, 1000]");
  }
  const double factor = (100.0 + percent) / 100.0;
  const double cx = (img.width() - 1) / 2.0;
  const double cy = (img.height() - 1) / 2.0;
  return resample(img, img.width(), img.height(), [=](std::uint32_t x, std::uint32_t y) {
    return std::pair{(x - cx) / factor + cx, (y - cy) / factor + cy};
  });
}

Image rotate(const Image& img, double degrees) {
  require_range(degrees, -360.0, 360.0, "rotate");
  const double theta = degrees * std::numbers::pi / 180.0;
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double cx = (img.width() - 1) / 2.0;
  const double cy = (img.height() - 1) / 2.0;
  // Inverse map: output pixel looks up the source rotated by -theta.
  return resample(img, img.width(), img.height(), [=](std::uint32_t x, std::uint32_t y) {
    const double dx = x - cx;
    const double dy = y - cy;
    return std::pair{cx + cos_t * dx - sin_t * dy, cy + sin_t * dx + cos_t * dy};
  });
}

Image shift(const Image& img, double percent) {
  require_range(percent, -100.0, 100.0, "shift");
  const auto dx = static_cast<std::int64_t>(std::round(percent * img.width() / 100.0));
  const auto dy = static_cast<std::int64_t>(std::round(percent * img.height() / 100.0));
  Image out(img.width(), img.height(), img.channels(), img.ceiling());
  const std::int64_t w = img.width();
  const std::int64_t h = img.height();
  for (std::int64_t y = 0; y < h; ++y) {
    const std::int64_t sy = y - dy;
    if (sy < 0 || sy >= h) {
      continue;
    }
    for (std::int64_t x = 0; x < w; ++x) {
      const std::int64_t sx = x - dx;
      if (sx < 0 || sx >= w) {
        continue;
      }
      for (unsigned c = 0; c < img.channels(); ++c) {
        out.at(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), c) =
            img.at(static_cast<std::uint32_t>(sx), static_cast<std::uint32_t>(sy), c);
      }
    }
  }
  return out;
}

Image resize_bilinear(const Image& img, std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("resize target must be at least 1x1");
  }
  const double rx = static_cast<double>(img.width()) / width;
  const double ry = static_cast<double>(img.height()) / height;
  const double max_x = img.width() - 1.0;
  const double max_y = img.height() - 1.0;
  return resample(img, width, height, [=](std::uint32_t x, std::uint32_t y) {
    return std::pair{std::clamp((x + 0.5) * rx - 0.5, 0.0, max_x),
                     std::clamp((y + 0.5) * ry - 0.5, 0.0, max_y)};
  });
}

Image apply(const Image& img, const TransformSpec& spec) {
  switch (spec.kind) {
    case TransformKind::identity: return img;
    case TransformKind::brightness: return adjust_brightness(img, spec.magnitude);
    case TransformKind::contrast: return adjust_contrast(img, spec.magnitude);
    case TransformKind::saturation: return adjust_saturation(img, spec.magnitude);
    case TransformKind::color_balance:
      return color_balance(img, spec.channel, spec.magnitude);
    case TransformKind::noise: return add_noise(img, spec.magnitude, spec.noise_seed);
    case TransformKind::scale: return scale(img, spec.magnitude);
    case TransformKind::rotate: return rotate(img, spec.magnitude);
    case TransformKind::shift: return shift(img, spec.magnitude);
    case TransformKind::invert: return invert_image(img);
  }
  throw InvalidArgument("unknown transform kind");
}

std::string describe(const TransformSpec& spec) {
  std::ostringstream out;
  out << kind_name(spec.kind);
  switch (spec.kind) {
    case TransformKind::identity:
    case TransformKind::invert:
      return out.str();
    case TransformKind::color_balance:
      out << ' ' << "RGB"[static_cast<unsigned>(spec.channel)];
      break;
    default:
      break;
  }
  out << ' ' << spec.magnitude << (spec.kind == TransformKind::rotate ? "deg" : "%");
  return out.str();
}

TransformSpec parse_transform(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) {
      break;
    }
    start = colon + 1;
  }

  TransformSpec spec;
  const std::string_view name = parts.front();
  static constexpr TransformKind kAll[] = {
      TransformKind::identity, TransformKind::brightness, TransformKind::contrast,
      TransformKind::saturation, TransformKind::color_balance, TransformKind::noise,
      TransformKind::scale,    TransformKind::rotate,     TransformKind::shift,
      TransformKind::invert};
  const auto* found = std::find_if(std::begin(kAll), std::end(kAll),
                                   [name](TransformKind k) { return kind_name(k) == name; });
  if (found == std::end(kAll)) {
    throw InvalidArgument("unknown transform '" + std::string(name) + "'");
  }
  spec.kind = *found;

  const bool bare = spec.kind == TransformKind::identity || spec.kind == TransformKind::invert;
  const std::size_t expected = bare ? 1 : spec.kind == TransformKind::color_balance ? 3 : 2;
  if (parts.size() != expected) {
    throw InvalidArgument("malformed transform '" + std::string(text) + "'");
  }
  if (spec.kind == TransformKind::color_balance) {
    const std::string_view ch = parts[1];
    if (ch == "R" || ch == "r") {
      spec.channel = Channel::red;
    } else if (ch == "G" || ch == "g") {
      spec.channel = Channel::green;
    } else if (ch == "B" || ch == "b") {
      spec.channel = Channel::blue;
    } else {
      throw InvalidArgument("color balance channel must be R, G or B");
    }
  }
  if (!bare) {
    spec.magnitude = parse_number(parts.back());
  }
  return spec;
}

std::vector<TransformSpec> default_suite(unsigned channels, std::uint64_t noise_seed) {
  std::vector<TransformSpec> suite;
  suite.push_back({TransformKind::contrast, 40.0});
  if (channels == 3) {
    suite.push_back({TransformKind::saturation, 40.0});
    suite.push_back({TransformKind::color_balance, 40.0, 1, Channel::red});
  }
  suite.push_back({TransformKind::noise, 20.0, noise_seed});
  suite.push_back({TransformKind::brightness, 40.0});
  suite.push_back({TransformKind::scale, 20.0});
  suite.push_back({TransformKind::rotate, 10.0});
  suite.push_back({TransformKind::shift, 20.0});
  return suite;
}

std::vector<BenchRow> bench_transforms(const Image& img, const KernelParams& params,
                                       const std::vector<TransformSpec>& suite,
                                       const BuildOptions& options) {
  if (suite.empty()) {
    throw InvalidArgument("transform suite is empty");
  }
  const Kernel reference = build_kernel(img, params, options);
  std::vector<BenchRow> rows;
  rows.reserve(suite.size());
  for (const TransformSpec& spec : suite) {
    const Kernel transformed = build_kernel(apply(img, spec), params, options);
    rows.push_back({spec, describe(spec), similarity(reference, transformed)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return a.similarity.matches > b.similarity.matches;
  });
  return rows;
}

}  // namespace ikernel
