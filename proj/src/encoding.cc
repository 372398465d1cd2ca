#include "dyadic/encoding.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyadic/status.h"

namespace dyadic {
namespace {

int CeilLog2(uint64_t n) {
  int e = 0;
  while (e < 64 && (uint64_t{1} << e) < n) ++e;
  return e;
}

}  // namespace

PixelGrid PixelGrid::FromSize(uint64_t width, uint64_t height) {
  if (width == 0 || height == 0) {
    throw Error(Status::kOutOfRange, "empty pixel grid");
  }
  return {width, height, CeilLog2(width), CeilLog2(height)};
}

bool DyadicRational::DistanceBelow(const DyadicRational& a,
                                   const DyadicRational& b, int ell) {
  // Bring both to the common denominator 2^e, compare |na - nb| * 2^ell < 2^e.
  const int e = std::max({a.exponent, b.exponent, ell});
  mpz_class na = a.numerator, nb = b.numerator;
  mpz_mul_2exp(na.get_mpz_t(), na.get_mpz_t(), e - a.exponent);
  mpz_mul_2exp(nb.get_mpz_t(), nb.get_mpz_t(), e - b.exponent);
  mpz_class diff = abs(na - nb);
  mpz_mul_2exp(diff.get_mpz_t(), diff.get_mpz_t(), ell);
  mpz_class bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), e);
  return diff < bound;
}

double DyadicRational::ToDouble() const {
  return std::ldexp(numerator.get_d(), -exponent);
}

bool operator==(const DyadicRational& a, const DyadicRational& b) {
  return a.numerator * PrimePower(2, b.exponent) ==
         b.numerator * PrimePower(2, a.exponent);
}

TruncatedPadic EncodeCoord(uint64_t x, int m) {
  if (m < 0 || m > 63 || x >= (uint64_t{1} << m)) {
    throw Error(Status::kOutOfRange, "coordinate " + std::to_string(x) +
                                         " does not fit depth " +
                                         std::to_string(m));
  }
  // Depth 0 has a single cell; keep one (zero) digit so the value is valid.
  if (m == 0) return TruncatedPadic::FromInteger(0, 2, 1);
  uint64_t residue = 0;
  uint64_t lo = 0;
  uint64_t span = uint64_t{1} << m;
  for (int level = 0; level < m; ++level) {
    span >>= 1;
    if (x >= lo + span) {
      residue |= uint64_t{1} << level;
      lo += span;
    }
  }
  return TruncatedPadic::FromInteger(
      mpz_class(static_cast<unsigned long>(residue)), 2, m);
}

uint64_t DecodeCoord(const TruncatedPadic& r, int m) {
  if (m == 0) return 0;
  const auto digits = r.Digits();
  uint64_t x = 0;
  for (int level = 0; level < m; ++level) {
    x = (x << 1) | (level < static_cast<int>(digits.size()) ? digits[level] : 0);
  }
  return x;
}

DyadicRational Iota(const TruncatedPadic& a) {
  if (a.prime() != 2) {
    throw Error(Status::kPrimeMismatch, "iota is defined for p = 2");
  }
  const auto digits = a.Digits();
  const int e = static_cast<int>(digits.size()) - 1;
  DyadicRational out;
  out.exponent = std::max(e, 0);
  for (int v = 0; v < static_cast<int>(digits.size()); ++v) {
    if (digits[v] != 0) {
      mpz_class term = 1;
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), out.exponent - v);
      out.numerator += term;
    }
  }
  return out;
}

EncodedPoint EncodePixel(uint64_t x, uint64_t y, const PixelGrid& grid) {
  if (x >= grid.width || y >= grid.height) {
    throw Error(Status::kOutOfRange,
                "pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                    ") outside " + std::to_string(grid.width) + "x" +
                    std::to_string(grid.height));
  }
  return {EncodeCoord(x, grid.m), EncodeCoord(y, grid.h)};
}

}  // namespace dyadic
