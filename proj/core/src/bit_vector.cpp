#include "ikernel/bit_vector.hpp"

#include <bit>

#include "ikernel/error.hpp"

namespace ikernel {

BitVector::BitVector(std::size_t size)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i, true);
    } else if (bits[i] != '0') {
      throw InvalidArgument("bit string may only contain '0' and '1'");
    }
  }
  return out;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (const Word w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::size_t BitVector::agreements(const BitVector& other) const noexcept {
  std::size_t differing = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    differing += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
  }
  // Padding bits are zero in both vectors, so they never count as differing.
  return size_ - differing;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) {
      out[i] = '1';
    }
  }
  return out;
}

}  // namespace ikernel
