#include "ikernel/oracle.hpp"

#include <bit>

#include "ikernel/error.hpp"

namespace ikernel::oracle {
namespace {

constexpr unsigned kMaxLength = 32;

std::uint32_t length_mask(unsigned length) {
  return length == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << length) - 1;
}

void require_exhaustive(unsigned length) {
  if (length > kMaxExhaustiveBits) {
    throw InvalidArgument("exhaustive kernel infeasible");
  }
}

}  // namespace

BitString::BitString(unsigned length, std::uint32_t value)
    : length_(length), value_(value) {
  if (length == 0 || length > kMaxLength) {
    throw InvalidArgument("bit string length must be in [1, 32]");
  }
  if ((value & ~length_mask(length)) != 0) {
    throw InvalidArgument("bit string value does not fit its length");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxLength) {
    throw InvalidArgument("bit string length must be in [1, 32]");
  }
  std::uint32_t value = 0;
  for (const char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("bit string may only contain '0' and '1'");
    }
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitString(static_cast<unsigned>(text.size()), value);
}

std::string BitString::to_string() const {
  std::string out(length_, '0');
  for (unsigned i = 0; i < length_; ++i) {
    if ((value_ >> (length_ - 1 - i)) & 1U) {
      out[i] = '1';
    }
  }
  return out;
}

BitString BitString::complement() const noexcept {
  return BitString(length_, ~value_ & length_mask(length_));
}

unsigned hamming(const BitString& a, const BitString& b) {
  if (a.length() != b.length()) {
    throw IncomparableError("incomparable lengths");
  }
  return static_cast<unsigned>(std::popcount(a.value() ^ b.value()));
}

bool classify_transformation(const BitString& source, const BitString& variant) {
  return 2 * hamming(source, variant) < source.length();
}

BitVector exact_kernel(const BitString& source) {
  const unsigned n = source.length();
  require_exhaustive(n);
  const std::uint32_t variants = std::uint32_t{1} << n;
  BitVector kernel(variants);
  for (std::uint32_t v = 0; v < variants; ++v) {
    const auto distance = static_cast<unsigned>(std::popcount(source.value() ^ v));
    if (2 * distance < n) {
      kernel.set(v, true);
    }
  }
  return kernel;
}

SimilarityResult exact_similarity(const BitString& a, const BitString& b) {
  if (a.length() != b.length()) {
    throw IncomparableError("incomparable lengths");
  }
  const BitVector ka = exact_kernel(a);
  const BitVector kb = exact_kernel(b);
  return {ka.agreements(kb), ka.size()};
}

std::uint64_t variant_count(const GeneralString& s) noexcept {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << kMaxExhaustiveBits;
  const std::uint64_t radix = std::uint64_t{s.ceiling} + 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    count *= radix;
    if (count > kLimit) {
      return 0;
    }
  }
  return count;
}

BitVector generalized_exact_kernel(const GeneralString& s) {
  if (s.ceiling == 0) {
    throw InvalidArgument("intensity ceiling must be >= 1");
  }
  if (s.elems.empty()) {
    throw InvalidArgument("string must hold at least one element");
  }
  for (const auto e : s.elems) {
    if (e > s.ceiling) {
      throw InvalidArgument("string element exceeds intensity ceiling");
    }
  }
  const std::uint64_t variants = variant_count(s);
  if (variants == 0) {
    throw InvalidArgument("exhaustive kernel infeasible");
  }

  const std::size_t n = s.elems.size();
  const std::int64_t ceiling = s.ceiling;
  BitVector kernel(variants);
  // Odometer over the mixed-radix digits, last element least significant.
  std::vector<std::int64_t> digits(n, 0);
  for (std::uint64_t v = 0; v < variants; ++v) {
    std::int64_t to_variant = 0;
    std::int64_t to_inverse = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t a = s.elems[i];
      to_variant += a > digits[i] ? a - digits[i] : digits[i] - a;
      const std::int64_t inv = ceiling - digits[i];
      to_inverse += a > inv ? a - inv : inv - a;
    }
    if (to_variant < to_inverse) {
      kernel.set(v, true);
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] <= ceiling) {
        break;
      }
      digits[i] = 0;
    }
  }
  return kernel;
}

}  // namespace ikernel::oracle
