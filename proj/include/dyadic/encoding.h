#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "dyadic/padic.h"

namespace dyadic {

// Image of size width x height; the exponents are the smallest with
// width <= 2^m and height <= 2^h.
struct PixelGrid {
  uint64_t width = 1;
  uint64_t height = 1;
  int m = 0;
  int h = 0;

  static PixelGrid FromSize(uint64_t width, uint64_t height);
};

struct EncodedPoint {
  TruncatedPadic r;
  TruncatedPadic s;
};

// numerator / 2^exponent, always in [0, 2).
struct DyadicRational {
  mpz_class numerator = 0;
  int exponent = 0;

  // Exact comparison of |a - b| < 2^(-ell).
  static bool DistanceBelow(const DyadicRational& a, const DyadicRational& b,
                            int ell);
  double ToDouble() const;

  friend bool operator==(const DyadicRational& a, const DyadicRational& b);
};

// Branch sequence of x under m halvings of [0, 2^m): digit v is 1 when x lies
// in the right half at level v. Equal to the m-bit reversal of x.
TruncatedPadic EncodeCoord(uint64_t x, int m);
uint64_t DecodeCoord(const TruncatedPadic& r, int m);

// sum a_v 2^v  ->  sum a_v 2^(-v).
DyadicRational Iota(const TruncatedPadic& a);

EncodedPoint EncodePixel(uint64_t x, uint64_t y, const PixelGrid& grid);

}  // namespace dyadic
