#include "dyadic/padic.h"

#include <gtest/gtest.h>

#include <random>

#include "dyadic/status.h"

namespace dyadic {
namespace {

TruncatedPadic Two(long n, int precision) {
  return TruncatedPadic::FromInteger(n, 2, precision);
}

TEST(FromInteger, ReducesIntoRange) {
  EXPECT_EQ(Two(0, 8).residue(), 0);
  EXPECT_EQ(Two(-1, 4).residue(), 15);
  EXPECT_EQ(Two(12, 8).residue(), 12);
  EXPECT_EQ(Two(-17, 4).residue(), 15);
  EXPECT_EQ(TruncatedPadic::FromInteger(-1, 3, 2).residue(), 8);
}

TEST(FromInteger, RejectsBadArguments) {
  EXPECT_THROW(Two(1, 0), Error);
  EXPECT_THROW(TruncatedPadic::FromInteger(1, 1, 4), Error);
}

TEST(Arithmetic, SpecValues) {
  EXPECT_EQ((Two(7, 4) + Two(9, 4)).residue(), 0);
  EXPECT_EQ((Two(3, 4) * Two(11, 4)).residue(), 1);
  EXPECT_EQ((-Two(1, 3)).residue(), 7);
  EXPECT_EQ((Two(3, 4) - Two(5, 4)).residue(), 14);
}

TEST(Arithmetic, PrecisionIsMinimum) {
  const TruncatedPadic sum = Two(13, 8) + Two(7, 3);
  EXPECT_EQ(sum.precision(), 3);
  EXPECT_EQ(sum.residue(), (13 + 7) % 8);
}

TEST(Arithmetic, PrimeMismatchThrows) {
  try {
    (void)(Two(1, 4) + TruncatedPadic::FromInteger(1, 3, 4));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.status(), Status::kPrimeMismatch);
  }
}

TEST(Valuation, SpecValues) {
  EXPECT_EQ(Two(12, 8).Valuation(), (PadicNorm{2, false}));
  EXPECT_EQ(Two(7, 8).Valuation(), (PadicNorm{0, false}));
  EXPECT_EQ(Two(0, 8).Valuation(), (PadicNorm{8, true}));
  EXPECT_EQ(TruncatedPadic::FromInteger(18, 3, 4).Valuation(), (PadicNorm{2, false}));
}

TEST(InvertUnit, SpecValues) {
  EXPECT_EQ(Two(1, 4).InvertUnit().residue(), 1);
  EXPECT_EQ(Two(3, 4).InvertUnit().residue(), 11);
  try {
    (void)Two(2, 4).InvertUnit();
    FAIL() << "expected NonUnit";
  } catch (const Error& e) {
    EXPECT_EQ(e.status(), Status::kNonUnit);
  }
}

TEST(InvertUnit, MatchesBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    const long modulus = 1L << n;
    for (long a = 1; a < modulus; a += 2) {
      long expected = -1;
      for (long x = 0; x < modulus; ++x) {
        if ((a * x) % modulus == 1) expected = x;
      }
      EXPECT_EQ(Two(a, n).InvertUnit().residue(), expected) << a << " mod 2^" << n;
    }
  }
}

TEST(Digits, SpecValues) {
  EXPECT_EQ(Two(5, 4).Digits(), (std::vector<unsigned>{1, 0, 1, 0}));
  EXPECT_EQ(Two(0, 3).Digits(), (std::vector<unsigned>{0, 0, 0}));
  EXPECT_EQ(TruncatedPadic::FromInteger(6, 3, 3).Digits(),
            (std::vector<unsigned>{0, 2, 0}));
}

TEST(Digits, StringForm) {
  EXPECT_EQ(Two(12, 8).ToString(), "2:8:00110000");
  EXPECT_EQ(TruncatedPadic::Parse("2:8:00110000"), Two(12, 8));
  EXPECT_EQ(TruncatedPadic::Parse("3:3:020").residue(), 6);
  EXPECT_THROW(TruncatedPadic::Parse("2:3:0120"), Error);
  EXPECT_THROW(TruncatedPadic::Parse("2:3:012"), Error);
  EXPECT_THROW(TruncatedPadic::Parse("garbage"), Error);
}

TEST(Truncate, AgreesOnCommonDigits) {
  const TruncatedPadic a = Two(0b1011011, 7);
  EXPECT_EQ(a.Truncate(3).residue(), 0b011);
  EXPECT_TRUE(a.EqualsAtCommonPrecision(Two(0b11, 3)));
  EXPECT_FALSE(a.EqualsAtCommonPrecision(Two(0b10, 3)));
  EXPECT_THROW((void)a.Truncate(8), Error);
}

class RandomPadics : public ::testing::Test {
 protected:
  TruncatedPadic Next(unsigned prime, int precision) {
    std::uniform_int_distribution<long> dist(-100000, 100000);
    return TruncatedPadic::FromInteger(dist(rng_), prime, precision);
  }
  std::mt19937_64 rng_{20240611};
};

TEST_F(RandomPadics, RingAxioms) {
  for (unsigned prime : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + trial % 20;
      const auto a = Next(prime, n), b = Next(prime, n), c = Next(prime, n);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a - a, TruncatedPadic::FromInteger(0, prime, n));
    }
  }
}

TEST_F(RandomPadics, Ultrametric) {
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 24;
    const auto a = Next(2, n), b = Next(2, n);
    EXPECT_GE((a + b).Valuation().exponent,
              std::min(a.Valuation().exponent, b.Valuation().exponent));
  }
}

TEST_F(RandomPadics, InverseIsAnInvolution) {
  for (unsigned prime : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = Next(prime, 1 + trial % 30);
      if (!a.IsUnit()) continue;
      EXPECT_EQ(a.InvertUnit().InvertUnit(), a);
      EXPECT_EQ((a * a.InvertUnit()).residue(), 1);
    }
  }
}

TEST_F(RandomPadics, DigitsRoundTrip) {
  for (unsigned prime : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = Next(prime, 1 + trial % 16);
      EXPECT_EQ(TruncatedPadic::FromDigits(a.Digits(), prime), a);
      EXPECT_EQ(TruncatedPadic::Parse(a.ToString()), a);
    }
  }
}

TEST_F(RandomPadics, TruncationCommutesWithArithmetic) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 20;
    const int k = 1 + trial % (n - 1);
    const auto a = Next(2, n), b = Next(2, n);
    EXPECT_EQ((a * b).Truncate(k), a.Truncate(k) * b.Truncate(k));
    EXPECT_EQ((a + b).Truncate(k), a.Truncate(k) + b.Truncate(k));
  }
}

TEST(TwoAdicValuation, CapsAtLimit) {
  EXPECT_EQ(TwoAdicValuation(0, 9), 9);
  EXPECT_EQ(TwoAdicValuation(48, 9), 4);
  EXPECT_EQ(TwoAdicValuation(-48, 2), 2);
  EXPECT_EQ(Mod2k(-3, 4), 13);
}

}  // namespace
}  // namespace dyadic
