#include "ikernel/netpbm.hpp"

#include <fstream>
#include <iterator>
#include <string>

#include "ikernel/error.hpp"

namespace ikernel {
namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool done() const { return pos_ >= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }
  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }
  void advance(std::size_t n = 1) { pos_ += n; }

  void skip_space_and_comments() {
    while (!done()) {
      if (peek() == '#') {
        while (!done() && peek() != '\n' && peek() != '\r') {
          advance();
        }
      } else if (is_space(peek())) {
        advance();
      } else {
        break;
      }
    }
  }

  // Unsigned decimal; returns false when no digits are present.
  bool read_uint(std::uint64_t& out) {
    skip_space_and_comments();
    if (done() || !is_digit(peek())) {
      return false;
    }
    out = 0;
    while (!done() && is_digit(peek())) {
      out = out * 10 + (peek() - '0');
      if (out > 0xFFFFFFFFULL) {
        return false;
      }
      advance();
    }
    return true;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint64_t header_field(Cursor& cur) {
  std::uint64_t v = 0;
  if (!cur.read_uint(v)) {
    throw FormatError("malformed header");
  }
  return v;
}

}  // namespace

Image decode_netpbm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw FormatError("malformed header: not a netpbm file");
  }
  const std::uint8_t kind = bytes[1];
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
    throw FormatError("malformed header: unsupported netpbm type");
  }
  const bool ascii = kind == '2' || kind == '3';
  const unsigned channels = (kind == '3' || kind == '6') ? 3 : 1;

  Cursor cur(bytes);
  cur.advance(2);
  if (!cur.done() && !is_space(cur.peek()) && cur.peek() != '#') {
    throw FormatError("malformed header");
  }
  const std::uint64_t width = header_field(cur);
  const std::uint64_t height = header_field(cur);
  const std::uint64_t maxval = header_field(cur);
  if (width == 0 || height == 0) {
    throw FormatError("malformed header: zero dimension");
  }
  if (maxval == 0 || maxval > 65535) {
    throw FormatError("malformed header: maxval must be in [1, 65535]");
  }

  // Every sample takes at least one byte in either encoding.
  if (width * height > bytes.size() || width * height * channels > bytes.size()) {
    throw FormatError("truncated payload");
  }
  const std::uint64_t count = width * height * channels;
  std::vector<Sample> samples(count);
  if (ascii) {
    for (auto& s : samples) {
      std::uint64_t v = 0;
      cur.skip_space_and_comments();
      if (cur.done()) {
        throw FormatError("truncated payload");
      }
      if (!cur.read_uint(v)) {
        throw FormatError("malformed payload: expected a decimal sample");
      }
      if (v > maxval) {
        throw FormatError("sample exceeds maxval");
      }
      s = static_cast<Sample>(v);
    }
  } else {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.done() || !is_space(cur.peek())) {
      throw FormatError(cur.done() ? "truncated payload" : "malformed header");
    }
    cur.advance();
    const std::uint64_t width_bytes = maxval > 255 ? 2 : 1;
    const auto raster = cur.rest();
    if (raster.size() < count * width_bytes) {
      throw FormatError("truncated payload");
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t v = width_bytes == 2
                                  ? (std::uint64_t{raster[2 * i]} << 8) | raster[2 * i + 1]
                                  : raster[i];
      if (v > maxval) {
        throw FormatError("sample exceeds maxval");
      }
      samples[i] = static_cast<Sample>(v);
    }
  }
  return Image(static_cast<std::uint32_t>(width), static_cast<std::uint32_t>(height),
               channels, static_cast<Sample>(maxval), std::move(samples));
}

std::vector<std::uint8_t> encode_netpbm(const Image& img) {
  const std::string header = std::string(img.channels() == 3 ? "P6" : "P5") + "\n" +
                             std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n" +
                             std::to_string(img.ceiling()) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const bool wide = img.ceiling() > 255;
  out.reserve(out.size() + img.sample_count() * (wide ? 2 : 1));
  for (const Sample s : img.samples()) {
    if (wide) {
      out.push_back(static_cast<std::uint8_t>(s >> 8));
    }
    out.push_back(static_cast<std::uint8_t>(s & 0xFF));
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failed for '" + path.string() + "'");
  }
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot create '" + path.string() + "'");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("write failed for '" + path.string() + "'");
  }
}

Image read_image(const std::filesystem::path& path) {
  return decode_netpbm(read_file(path));
}

void write_image(const Image& img, const std::filesystem::path& path) {
  write_file(path, encode_netpbm(img));
}

}  // namespace ikernel
