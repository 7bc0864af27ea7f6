#pragma once

// IKRN kernel files. Layout (little-endian integers):
//
//   offset  size  field
//        0     4  magic "IKRN"
//        4     1  version (1)
//        5     1  flags (bit 0: template)
//        6     1  channels
//        7     1  reserved (0)
//        8     2  intensity ceiling
//       10     4  width
//       14     4  height
//       18     8  seed
//       26     8  k (kernel bits)
//       34     *  ceil(k / 8) payload bytes, MSB-first, zero padded

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ikernel/image_kernel.hpp"

namespace ikernel {

inline constexpr std::size_t kKernelHeaderSize = 34;
inline constexpr std::uint8_t kKernelFormatVersion = 1;

std::vector<std::uint8_t> encode_kernel(const Kernel& kernel);
Kernel decode_kernel(std::span<const std::uint8_t> bytes);

Kernel read_kernel(const std::filesystem::path& path);
void write_kernel(const Kernel& kernel, const std::filesystem::path& path);

}  // namespace ikernel
