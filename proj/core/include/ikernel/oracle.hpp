#pragma once

// Exhaustive information kernels over every variant of a short string.
//
// Variant v ranges over all strings of the source's length in ascending
// integer order; kernel bit v is 1 when v is a weak transformation of the
// source (differs in strictly fewer than n/2 positions) and 0 otherwise.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ikernel/bit_vector.hpp"
#include "ikernel/similarity.hpp"

namespace ikernel::oracle {

/// Longest bit string accepted by the exhaustive routines (2^24-bit kernels).
inline constexpr unsigned kMaxExhaustiveBits = 24;

/// An n-bit string. The first character of its textual form is the most
/// significant bit of `value`, so "001" is value 1.
class BitString {
 public:
  BitString(unsigned length, std::uint32_t value);

  static BitString parse(std::string_view text);

  unsigned length() const noexcept { return length_; }
  std::uint32_t value() const noexcept { return value_; }
  std::string to_string() const;

  BitString complement() const noexcept;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  unsigned length_;
  std::uint32_t value_;
};

/// Number of differing positions. Throws IncomparableError on length mismatch.
unsigned hamming(const BitString& a, const BitString& b);

/// true (weak, bit 1) iff hamming(source, variant) < n/2, strictly.
bool classify_transformation(const BitString& source, const BitString& variant);

/// Kernel of length 2^n; bit v = classify_transformation(source, v).
BitVector exact_kernel(const BitString& source);

/// Agreement count of the two exact kernels over all 2^n variants.
SimilarityResult exact_similarity(const BitString& a, const BitString& b);

/// A string over the alphabet {0, ..., ceiling}.
struct GeneralString {
  std::uint32_t ceiling = 1;
  std::vector<std::uint32_t> elems;
};

/// Number of variants (ceiling + 1)^n, or 0 when it exceeds 2^24.
std::uint64_t variant_count(const GeneralString& s) noexcept;

/// Kernel over all (ceiling + 1)^n variants in ascending mixed-radix order
/// (first element most significant). Bit v is 1 iff the L1 distance from the
/// source to v is strictly less than the distance to v's inversion.
BitVector generalized_exact_kernel(const GeneralString& s);

}  // namespace ikernel::oracle
