#include "dyadic/linalg.h"

#include <string>
#include <utility>

#include "dyadic/status.h"

namespace dyadic {

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
  data_.reserve(size_t(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw Error(Status::kDimensionMismatch, "ragged BitMatrix literal");
    }
    for (const int v : row) data_.push_back(static_cast<uint8_t>(v & 1));
  }
}

BitVector BitMatrix::Row(int r) const {
  return BitVector(data_.begin() + size_t(r) * cols_,
                   data_.begin() + size_t(r + 1) * cols_);
}

BitVector BitMatrix::Apply(const BitVector& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw Error(Status::kDimensionMismatch, "BitMatrix::Apply");
  }
  BitVector y(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    uint8_t acc = 0;
    for (int c = 0; c < cols_; ++c) acc ^= (*this)(r, c) & x[c];
    y[r] = acc;
  }
  return y;
}

ResidueMatrix::ResidueMatrix(int rows, int cols, int precision)
    : rows_(rows), cols_(cols), precision_(precision),
      data_(size_t(rows) * cols, mpz_class(0)) {
  if (precision < 1) {
    throw Error(Status::kOutOfRange, "precision must be at least 1");
  }
}

ResidueMatrix ResidueMatrix::FromIntegers(const std::vector<IntVector>& rows,
                                          int cols, int precision) {
  ResidueMatrix m(static_cast<int>(rows.size()), cols, precision);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw Error(Status::kDimensionMismatch, "row length");
    }
    for (int c = 0; c < cols; ++c) m.Set(r, c, rows[r][c]);
  }
  return m;
}

void ResidueMatrix::Set(int r, int c, const mpz_class& value) {
  data_[Index(r, c)] = Mod2k(value, precision_);
}

TruncatedPadic ResidueMatrix::Entry(int r, int c) const {
  return TruncatedPadic::FromInteger((*this)(r, c), 2, precision_);
}

BitMatrix ResidueMatrix::Mod2() const {
  BitMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      m.Set(r, c, mpz_odd_p((*this)(r, c).get_mpz_t()) != 0);
    }
  }
  return m;
}

ResidueMatrix ResidueMatrix::Truncate(int precision) const {
  if (precision > precision_) {
    throw Error(Status::kOutOfRange, "cannot raise precision by truncation");
  }
  ResidueMatrix m(rows_, cols_, precision);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.Set(r, c, (*this)(r, c));
  }
  return m;
}

IntVector ResidueMatrix::Apply(const IntVector& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw Error(Status::kDimensionMismatch, "ResidueMatrix::Apply");
  }
  IntVector y(rows_);
  for (int r = 0; r < rows_; ++r) {
    mpz_class acc = 0;
    for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = Mod2k(acc, precision_);
  }
  return y;
}

RowEchelon RrefMod2(const BitMatrix& a) {
  RowEchelon out{a, 0, {}};
  BitMatrix& m = out.form;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) {
        const uint8_t tmp = m(row, c);
        m.Set(row, c, m(pivot, c));
        m.Set(pivot, c, tmp);
      }
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col)) {
        for (int c = col; c < m.cols(); ++c) m.Set(r, c, m(r, c) ^ m(row, c));
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

BitBasis NullspaceMod2(const BitMatrix& a) {
  const RowEchelon e = RrefMod2(a);
  BitBasis basis;
  basis.dimension = a.cols();
  std::vector<int> pivot_of_col(a.cols(), -1);
  for (int i = 0; i < e.rank; ++i) pivot_of_col[e.pivot_cols[i]] = i;
  for (int free = 0; free < a.cols(); ++free) {
    if (pivot_of_col[free] >= 0) continue;
    BitVector v(a.cols(), 0);
    v[free] = 1;
    for (int i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = e.form(i, free);
    basis.vectors.push_back(std::move(v));
    basis.pivot_rows.push_back(free);
  }
  return basis;
}

BitVector SolveAffineMod2(const BitMatrix& j, const BitVector& a) {
  if (static_cast<int>(a.size()) != j.rows()) {
    throw Error(Status::kDimensionMismatch, "SolveAffineMod2 right-hand side");
  }
  BitMatrix augmented(j.rows(), j.cols() + 1);
  for (int r = 0; r < j.rows(); ++r) {
    for (int c = 0; c < j.cols(); ++c) augmented.Set(r, c, j(r, c));
    augmented.Set(r, j.cols(), a[r]);
  }
  const RowEchelon e = RrefMod2(augmented);
  // Full row rank means no pivot lands on the augmented column.
  int rank = 0;
  for (const int c : e.pivot_cols) rank += c < j.cols() ? 1 : 0;
  if (rank < j.rows()) {
    throw Error(Status::kRankDeficient,
                "rank " + std::to_string(rank) + " < " + std::to_string(j.rows()));
  }
  BitVector t(j.cols(), 0);
  for (int i = 0; i < rank; ++i) t[e.pivot_cols[i]] = e.form(i, j.cols());
  return t;
}

UnitStaircase UnitPivotStaircase(const ResidueMatrix& a) {
  const int n = a.precision();
  std::vector<IntVector> m(a.rows(), IntVector(a.cols()));
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  }
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (mpz_odd_p(m[r][col].get_mpz_t())) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const mpz_class inv =
        TruncatedPadic::FromInteger(m[row][col], 2, n).InvertUnit().residue();
    for (auto& v : m[row]) v = Mod2k(v * inv, n);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const mpz_class factor = m[r][col];
      for (int c = 0; c < a.cols(); ++c) {
        m[r][c] = Mod2k(m[r][c] - factor * m[row][c], n);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (int r = row; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (m[r][c] != 0) {
        throw Error(Status::kRankDrop,
                    "row " + std::to_string(r) +
                        " has no odd pivot but is nonzero mod 2^" +
                        std::to_string(n));
      }
    }
  }
  m.resize(row);
  return {ResidueMatrix::FromIntegers(m, a.cols(), n), std::move(pivot_cols)};
}

LiftedBasis LiftNullspace(const ResidueMatrix& a, const BitBasis& basis,
                          int precision) {
  if (basis.dimension != a.cols()) {
    throw Error(Status::kDimensionMismatch, "basis length vs matrix columns");
  }
  if (precision < 1 || precision > a.precision()) {
    throw Error(Status::kOutOfRange, "target precision outside [1, data precision]");
  }
  const ResidueMatrix truncated = a.Truncate(precision);
  const UnitStaircase staircase = UnitPivotStaircase(truncated);
  const ResidueMatrix& s = staircase.rows;
  const BitMatrix jacobian = s.Mod2();

  LiftedBasis out;
  out.precision = precision;
  for (const BitVector& seed : basis.vectors) {
    IntVector x(seed.begin(), seed.end());
    int iterations = 0;
    for (int k = 2; k <= precision; ++k) {
      // S x = 2^(k-1) a (mod 2^k); correct by t with S t = a (mod 2).
      BitVector rhs(s.rows());
      for (int r = 0; r < s.rows(); ++r) {
        mpz_class acc = 0;
        for (int c = 0; c < s.cols(); ++c) acc += s(r, c) * x[c];
        acc = Mod2k(acc, k);
        rhs[r] = mpz_tstbit(acc.get_mpz_t(), k - 1);
      }
      const BitVector t = SolveAffineMod2(jacobian, rhs);
      for (int c = 0; c < s.cols(); ++c) {
        if (t[c]) {
          mpz_class step = 1;
          mpz_mul_2exp(step.get_mpz_t(), step.get_mpz_t(), k - 1);
          x[c] += step;
        }
      }
      ++iterations;
    }
    for (const auto& v : truncated.Apply(x)) {
      if (v != 0) {
        throw Error(Status::kRankDrop, "lifted vector is not a solution");
      }
    }
    out.vectors.push_back(std::move(x));
    out.iterations = iterations;
  }
  return out;
}

}  // namespace dyadic
