#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ikernel/image.hpp"

namespace ikernel {

/// Decodes PGM (P2/P5, one channel) or PPM (P3/P6, three channels).
/// The header maxval becomes the image ceiling; binary rasters with
/// maxval > 255 use two big-endian bytes per sample.
Image decode_netpbm(std::span<const std::uint8_t> bytes);

/// Binary P5 (gray) or P6 (RGB) encoding.
std::vector<std::uint8_t> encode_netpbm(const Image& img);

Image read_image(const std::filesystem::path& path);
void write_image(const Image& img, const std::filesystem::path& path);

/// Whole-file helpers shared by the readers.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace ikernel
