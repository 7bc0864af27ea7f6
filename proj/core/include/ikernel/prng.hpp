#pragma once

#include <cstdint>

namespace ikernel {

/// Weyl increment shared by every stream (the 64-bit golden ratio).
inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 output finalizer. A bijection on 64-bit words.
constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// A deterministic SplitMix64 stream.
///
/// All arithmetic is modulo 2^64, so a given state produces the same output
/// sequence on every platform. Streams are plain values: copy one to fork it.
class Stream {
 public:
  constexpr Stream() noexcept = default;
  constexpr explicit Stream(std::uint64_t state) noexcept : state_(state) {}

  /// Independent substream `stream_index` of `seed`.
  ///
  /// The base state is scrambled through the finalizer so that neighbouring
  /// indices do not walk overlapping stretches of the same Weyl sequence.
  static constexpr Stream derive(std::uint64_t seed,
                                 std::uint64_t stream_index) noexcept {
    return Stream(finalize(seed + (stream_index + 1) * kGoldenGamma));
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

  constexpr std::uint64_t next_raw() noexcept {
    state_ += kGoldenGamma;
    return finalize(state_);
  }

  /// Unbiased draw from {0, ..., ceiling}; requires ceiling >= 1.
  ///
  /// Rejection sampling: raw words at or above the largest multiple of
  /// (ceiling + 1) are redrawn. Power-of-two ranges never reject.
  std::uint64_t next_value(std::uint64_t ceiling);

  friend constexpr bool operator==(const Stream&, const Stream&) = default;

 private:
  std::uint64_t state_ = 0;
};

/// Precomputed rejection bounds for repeated draws from one range.
///
/// `Stream::next_value` recomputes these per call; the kernel hot loop draws
/// millions of values from the same range and uses this instead.
class UniformRange {
 public:
  explicit UniformRange(std::uint64_t ceiling);

  std::uint64_t ceiling() const noexcept { return ceiling_; }

  std::uint64_t operator()(Stream& stream) const noexcept {
    if (mask_ != 0) {
      return stream.next_raw() & mask_;
    }
    for (;;) {
      const std::uint64_t z = stream.next_raw();
      if (z < limit_) {
        return z % modulus_;
      }
    }
  }

 private:
  std::uint64_t ceiling_;
  std::uint64_t modulus_;  // ceiling + 1, or 0 when that wraps to 2^64
  std::uint64_t limit_;    // first rejected raw value
  std::uint64_t mask_;     // modulus - 1 when modulus is a power of two
};

}  // namespace ikernel
