#include "ikernel/kernel_io.hpp"

#include <algorithm>
#include <array>

#include "ikernel/error.hpp"
#include "ikernel/netpbm.hpp"

namespace ikernel {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'I', 'K', 'R', 'N'};
constexpr std::uint8_t kTemplateFlag = 0x01;

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i)));
  }
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= std::uint64_t{bytes[offset + i]} << (8 * i);
  }
  return static_cast<T>(v);
}

}  // namespace

std::vector<std::uint8_t> encode_kernel(const Kernel& kernel) {
  const KernelParams& p = kernel.params;
  if (kernel.bits.size() != p.bits) {
    throw InvalidArgument("kernel length does not match its parameters");
  }
  if (p.channels > 0xFF) {
    throw InvalidArgument("channel count does not fit the kernel header");
  }
  const std::uint64_t payload = (p.bits + 7) / 8;
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kKernelHeaderSize + payload);
  out.push_back(kKernelFormatVersion);
  out.push_back(kernel.is_template ? kTemplateFlag : 0);
  out.push_back(static_cast<std::uint8_t>(p.channels));
  out.push_back(0);
  put_le<std::uint16_t>(out, p.ceiling);
  put_le<std::uint32_t>(out, p.width);
  put_le<std::uint32_t>(out, p.height);
  put_le<std::uint64_t>(out, p.seed);
  put_le<std::uint64_t>(out, p.bits);

  const std::size_t base = out.size();
  out.resize(base + payload, 0);
  for (std::uint64_t i = 0; i < p.bits; ++i) {
    if (kernel.bits.get(i)) {
      out[base + i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
    }
  }
  return out;
}

Kernel decode_kernel(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() ||
      !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw FormatError("bad magic: not an IKRN kernel file");
  }
  if (bytes.size() < kKernelHeaderSize) {
    throw FormatError("truncated kernel header");
  }
  if (bytes[4] != kKernelFormatVersion) {
    throw FormatError("unsupported kernel format version " + std::to_string(bytes[4]));
  }
  const std::uint8_t flags = bytes[5];
  if ((flags & ~kTemplateFlag) != 0) {
    throw FormatError("unknown kernel flags");
  }

  Kernel kernel;
  kernel.is_template = (flags & kTemplateFlag) != 0;
  KernelParams& p = kernel.params;
  p.channels = bytes[6];
  p.ceiling = get_le<std::uint16_t>(bytes, 8);
  p.width = get_le<std::uint32_t>(bytes, 10);
  p.height = get_le<std::uint32_t>(bytes, 14);
  p.seed = get_le<std::uint64_t>(bytes, 18);
  p.bits = get_le<std::uint64_t>(bytes, 26);
  if (p.channels != 1 && p.channels != 3) {
    throw FormatError("kernel header: channels must be 1 or 3");
  }
  if (p.ceiling == 0 || p.width == 0 || p.height == 0) {
    throw FormatError("kernel header: zero ceiling or dimension");
  }
  if (p.bits == 0) {
    throw FormatError("kernel header: zero kernel length");
  }

  const auto payload = bytes.subspan(kKernelHeaderSize);
  const std::uint64_t expected = p.bits / 8 + (p.bits % 8 != 0 ? 1 : 0);
  if (payload.size() < expected) {
    throw FormatError("truncated kernel payload");
  }
  if (payload.size() > expected) {
    throw FormatError("trailing bytes after kernel payload");
  }
  if (p.bits % 8 != 0) {
    const auto padding = static_cast<std::uint8_t>(0xFFU >> (p.bits % 8));
    if ((payload.back() & padding) != 0) {
      throw FormatError("nonzero kernel padding bits");
    }
  }

  kernel.bits = BitVector(p.bits);
  for (std::uint64_t i = 0; i < p.bits; ++i) {
    if (payload[i / 8] & (0x80U >> (i % 8))) {
      kernel.bits.set(i, true);
    }
  }
  return kernel;
}

Kernel read_kernel(const std::filesystem::path& path) {
  return decode_kernel(read_file(path));
}

void write_kernel(const Kernel& kernel, const std::filesystem::path& path) {
  write_file(path, encode_kernel(kernel));
}

}  // namespace ikernel
