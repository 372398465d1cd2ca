#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dyadic/padic.h"

namespace dyadic {

using BitVector = std::vector<uint8_t>;
using IntVector = std::vector<mpz_class>;

// Dense matrix over GF(2), row-major, one byte per entry.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint8_t operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
  void Set(int r, int c, bool bit) { data_[size_t(r) * cols_ + c] = bit ? 1 : 0; }

  BitVector Row(int r) const;
  BitVector Apply(const BitVector& x) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> data_;
};

// Matrix over Z/2^N with a single precision shared by all entries.
class ResidueMatrix {
 public:
  ResidueMatrix() = default;
  ResidueMatrix(int rows, int cols, int precision);
  // Entries are reduced mod 2^precision on construction.
  static ResidueMatrix FromIntegers(const std::vector<IntVector>& rows,
                                    int cols, int precision);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int precision() const { return precision_; }

  const mpz_class& operator()(int r, int c) const { return data_[Index(r, c)]; }
  void Set(int r, int c, const mpz_class& value);
  TruncatedPadic Entry(int r, int c) const;

  BitMatrix Mod2() const;
  ResidueMatrix Truncate(int precision) const;
  // A x reduced mod 2^precision.
  IntVector Apply(const IntVector& x) const;

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

 private:
  size_t Index(int r, int c) const { return size_t(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  int precision_ = 1;
  std::vector<mpz_class> data_;
};

struct RowEchelon {
  BitMatrix form;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Nullspace basis in staircase normal form: vector i has a 1 at
// pivot_rows[i], zeros below it, and every other vector is 0 there.
struct BitBasis {
  int dimension = 0;  // ambient length
  std::vector<BitVector> vectors;
  std::vector<int> pivot_rows;
};

struct LiftedBasis {
  std::vector<IntVector> vectors;
  int iterations = 0;
  int precision = 1;
};

// Unique reduced row echelon form over GF(2).
RowEchelon RrefMod2(const BitMatrix& a);

BitBasis NullspaceMod2(const BitMatrix& a);

// Solves J t = a over GF(2), free components 0. Throws Error(kRankDeficient)
// unless J has full row rank.
BitVector SolveAffineMod2(const BitMatrix& j, const BitVector& a);

// Staircase form of A over Z/2^N using only odd pivots, chosen as the first
// row with an odd entry in each column. Rows are the rank-many pivot rows,
// pivots normalized to 1 and cleared above and below. Throws Error(kRankDrop)
// if a non-pivot row survives with a nonzero residue.
struct UnitStaircase {
  ResidueMatrix rows;
  std::vector<int> pivot_cols;
};
UnitStaircase UnitPivotStaircase(const ResidueMatrix& a);

// Lifts each seed of `basis` (the mod-2 nullspace of A) to a solution of
// A v = 0 mod 2^N with v = seed mod 2, one correction step per digit.
LiftedBasis LiftNullspace(const ResidueMatrix& a, const BitBasis& basis,
                          int precision);

}  // namespace dyadic
