#include "ikernel/prng.hpp"

#include <bit>
#include <limits>

#include "ikernel/error.hpp"

namespace ikernel {

UniformRange::UniformRange(std::uint64_t ceiling)
    : ceiling_(ceiling), modulus_(ceiling + 1), limit_(0), mask_(0) {
  if (ceiling == 0) {
    throw InvalidArgument("intensity ceiling must be >= 1");
  }
  if (modulus_ == 0 || std::has_single_bit(modulus_)) {
    // The whole 64-bit range divides evenly; no rejection is ever needed.
    mask_ = ceiling;
    return;
  }
  // 2^64 mod m, computed without 128-bit arithmetic.
  const std::uint64_t remainder =
      (std::numeric_limits<std::uint64_t>::max() % modulus_ + 1) % modulus_;
  limit_ = 0 - remainder;  // 2^64 - remainder
}

std::uint64_t Stream::next_value(std::uint64_t ceiling) {
  return UniformRange(ceiling)(*this);
}

}  // namespace ikernel
