#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace dyadic {

// p^n as an arbitrary-size integer.
mpz_class PrimePower(unsigned prime, int exponent);

// Reduces n into [0, modulus).
mpz_class ReduceMod(const mpz_class& n, const mpz_class& modulus);

// Reduces n into [0, 2^precision).
mpz_class Mod2k(const mpz_class& n, int precision);

// Largest k with 2^k | n, capped at `cap`; n == 0 gives `cap`.
int TwoAdicValuation(const mpz_class& n, int cap);

// |a|_p = p^(-exponent). A zero residue is reported as exponent == precision
// with `at_precision_floor` set, meaning "at most p^(-N)".
struct PadicNorm {
  int exponent = 0;
  bool at_precision_floor = false;

  friend bool operator==(const PadicNorm&, const PadicNorm&) = default;
};

// A p-adic integer known modulo p^N. Immutable; every operation returns a
// new value whose precision is the minimum of the operand precisions.
class TruncatedPadic {
 public:
  TruncatedPadic() = default;

  static TruncatedPadic FromInteger(const mpz_class& n, unsigned prime,
                                    int precision);
  static TruncatedPadic FromDigits(const std::vector<unsigned>& digits,
                                   unsigned prime);
  // Parses "p:N:d0d1...d(N-1)", least-significant digit first.
  static TruncatedPadic Parse(const std::string& text);

  unsigned prime() const { return prime_; }
  int precision() const { return precision_; }
  const mpz_class& residue() const { return residue_; }
  mpz_class modulus() const { return PrimePower(prime_, precision_); }

  TruncatedPadic operator+(const TruncatedPadic& other) const;
  TruncatedPadic operator-(const TruncatedPadic& other) const;
  TruncatedPadic operator*(const TruncatedPadic& other) const;
  TruncatedPadic operator-() const;

  PadicNorm Valuation() const;
  bool IsUnit() const;
  // Throws Error(kNonUnit) if p divides the residue.
  TruncatedPadic InvertUnit() const;

  // Reduces to a lower precision k <= precision().
  TruncatedPadic Truncate(int k) const;

  // N digits in [0, p), least-significant first.
  std::vector<unsigned> Digits() const;
  std::string ToString() const;

  // Residues agree modulo p^min(precision).
  bool EqualsAtCommonPrecision(const TruncatedPadic& other) const;

  friend bool operator==(const TruncatedPadic& a, const TruncatedPadic& b) {
    return a.prime_ == b.prime_ && a.precision_ == b.precision_ &&
           a.residue_ == b.residue_;
  }

 private:
  TruncatedPadic(unsigned prime, int precision, mpz_class residue)
      : prime_(prime), precision_(precision), residue_(std::move(residue)) {}

  void CheckPrime(const TruncatedPadic& other) const;

  unsigned prime_ = 2;
  int precision_ = 1;
  mpz_class residue_ = 0;
};

}  // namespace dyadic
