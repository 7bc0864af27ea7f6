#include "ikernel/bit_vector.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ikernel/error.hpp"

namespace ikernel {
namespace {

TEST(BitVector, StringRoundTrip) {
  const auto v = BitVector::from_string("10110000");
  EXPECT_EQ(v.size(), 8U);
  EXPECT_EQ(v.count(), 3U);
  EXPECT_EQ(v.to_string(), "10110000");
  EXPECT_TRUE(v[0]);
  EXPECT_FALSE(v[1]);
}

TEST(BitVector, RejectsNonBinaryCharacters) {
  EXPECT_THROW(BitVector::from_string("10a"), InvalidArgument);
}

TEST(BitVector, AgreementsCountEqualPositions) {
  const auto a = BitVector::from_string("10110000");
  const auto b = BitVector::from_string("10010001");
  EXPECT_EQ(a.agreements(b), 6U);
  EXPECT_EQ(a.agreements(a), 8U);
}

TEST(BitVector, AgreementsAcrossWordBoundaryMatchNaiveCount) {
  std::mt19937_64 rng(11);
  for (const std::size_t n : {1U, 63U, 64U, 65U, 130U, 1000U}) {
    BitVector a(n);
    BitVector b(n);
    std::size_t naive = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool x = rng() & 1U;
      const bool y = rng() & 1U;
      a.set(i, x);
      b.set(i, y);
      naive += x == y ? 1 : 0;
    }
    EXPECT_EQ(a.agreements(b), naive) << n;
    EXPECT_EQ(b.agreements(a), naive) << n;
  }
}

TEST(BitVector, SetAndClear) {
  BitVector v(70);
  v.set(69, true);
  v.set(0, true);
  EXPECT_EQ(v.count(), 2U);
  v.set(69, false);
  EXPECT_EQ(v.count(), 1U);
  EXPECT_FALSE(v.get(69));
}

}  // namespace
}  // namespace ikernel
