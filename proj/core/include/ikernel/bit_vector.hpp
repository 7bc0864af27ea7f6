#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ikernel {

/// Fixed-length packed bit vector backed by 64-bit words.
///
/// Bit i lives in word i / 64 at position i % 64 (LSB-first inside a word).
/// Bits past size() in the last word are always zero, which lets popcount
/// based comparisons run over whole words.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size);

  /// Parses a string of '0' / '1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  void set(std::size_t i, bool value) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    Word& w = words_[i / kWordBits];
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Number of set bits.
  std::size_t count() const noexcept;

  /// Number of positions where both vectors hold the same bit.
  /// Requires equal sizes.
  std::size_t agreements(const BitVector& other) const noexcept;

  /// '0' / '1' rendering, index 0 first.
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace ikernel
