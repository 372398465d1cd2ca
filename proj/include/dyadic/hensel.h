#pragma once

#include <gmpxx.h>

#include <vector>

#include "dyadic/linalg.h"
#include "dyadic/polynomial.h"

namespace dyadic {

// m polynomials in n shared variables, m <= n.
class PolySystem {
 public:
  explicit PolySystem(std::vector<IntPolynomial> equations);

  int num_equations() const { return static_cast<int>(equations_.size()); }
  int num_vars() const { return num_vars_; }
  const std::vector<IntPolynomial>& equations() const { return equations_; }
  const IntPolynomial& operator[](int i) const { return equations_[i]; }

  // Residues of every equation at x, reduced mod 2^k.
  IntVector EvalMod(const IntVector& x, int k) const;

 private:
  int num_vars_;
  std::vector<IntPolynomial> equations_;
};

// x^(1) .. x^(N): solutions mod 2, 4, ..., 2^N with their correction vectors.
struct LiftTrace {
  std::vector<IntVector> approximations;
  std::vector<BitVector> corrections;

  const IntVector& Final() const { return approximations.back(); }
  int steps() const { return static_cast<int>(corrections.size()); }
};

mpz_class EvalMod(const IntPolynomial& f, const IntVector& x, int k);

// (df_i/dX_j)(x) mod 2.
BitMatrix JacobianMod2(const PolySystem& system, const IntVector& x);

// Refines a solution mod 2^(k-1) to one mod 2^k by x + 2^(k-1) t, where
// a + J t = 0 mod 2 and F(x) = 2^(k-1) a. Throws Error(kRankDeficient) when
// the Jacobian mod 2 has rank < m, and Error(kNoLiftableRoot) when x is not
// a solution mod 2^(k-1).
IntVector LiftStep(const PolySystem& system, const IntVector& x, int k);

// N-1 lift steps from a mod-2 seed.
LiftTrace Lift(const PolySystem& system, const IntVector& seed, int precision);

struct Mod2Root {
  int value = 0;
  bool simple = false;

  friend bool operator==(const Mod2Root&, const Mod2Root&) = default;
};

// Roots of a univariate g in F_2, flagged simple when g' is odd there.
std::vector<Mod2Root> UnivariateRootsMod2(const IntPolynomial& g);

}  // namespace dyadic
