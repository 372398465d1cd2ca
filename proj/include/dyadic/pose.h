#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/hensel.h"
#include "dyadic/linalg.h"
#include "dyadic/padic.h"
#include "dyadic/polynomial.h"

namespace dyadic {

// Row-major 3x3 matrix, entry (i, j) at index 3i + j.
template <typename T>
using Mat3Of = std::array<T, 9>;
using Mat3 = Mat3Of<mpz_class>;

template <typename T>
T Determinant3(const Mat3Of<T>& e) {
  return e[0] * (e[4] * e[8] - e[5] * e[7]) -
         e[1] * (e[3] * e[8] - e[5] * e[6]) +
         e[2] * (e[3] * e[7] - e[4] * e[6]);
}

// Entries of 2 E E^T E - Trace(E E^T) E, expanded exactly.
template <typename T>
Mat3Of<T> TraceCondition(const Mat3Of<T>& e) {
  std::array<T, 9> eet;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      eet[3 * i + k] = e[3 * i] * e[3 * k] + e[3 * i + 1] * e[3 * k + 1] +
                       e[3 * i + 2] * e[3 * k + 2];
    }
  }
  const T trace = eet[0] + eet[4] + eet[8];
  Mat3Of<T> out;
  for (int i = 0; i < 3; ++i) {
    for (int l = 0; l < 3; ++l) {
      const T p = eet[3 * i] * e[l] + eet[3 * i + 1] * e[3 + l] +
                  eet[3 * i + 2] * e[6 + l];
      out[3 * i + l] = p + p - trace * e[3 * i + l];
    }
  }
  return out;
}

// Homogeneous image point pair. Components are 2-adic integers and each point
// has at least one unit component.
struct Correspondence {
  std::array<TruncatedPadic, 3> u;
  std::array<TruncatedPadic, 3> v;

  // Divides out the common power of two of each point, then reduces mod
  // 2^precision. Throws Error(kMalformedInput) for a zero point.
  static Correspondence FromIntegers(const std::array<mpz_class, 3>& u,
                                     const std::array<mpz_class, 3>& v,
                                     int precision);
  int precision() const;
};

enum class Method { kEightPoint, kSevenPoint, kFivePoint };
std::string_view MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);

// Cofactor position (deleted row and column) of a 2x2 minor that is a unit.
struct MinorIndex {
  int row = 0;
  int col = 0;
};

struct EssentialCandidate {
  Mat3 e;
  int precision = 1;
  Method method = Method::kEightPoint;
  std::string seed;
  int iterations = 0;
  std::optional<MinorIndex> witness;
  bool valid = false;

  TruncatedPadic Entry(int i, int j) const {
    return TruncatedPadic::FromInteger(e[3 * i + j], 2, precision);
  }
};

struct PencilBasis {
  std::vector<Mat3> matrices;
  std::vector<int> free_positions;
  int precision = 1;
  int iterations = 0;
};

struct CubicCoeffs {
  TruncatedPadic a, b, c, d;
};

struct CubicRoots {
  bool zero = false;
  bool one = false;
};

// Monomials (x^3, y^3, x^2 y, x y^2, x^2, y^2, x y, x, y, 1).
inline constexpr std::array<std::array<int, 2>, 10> kHiddenMonomials = {{
    {3, 0}, {0, 3}, {2, 1}, {1, 2}, {2, 0}, {0, 2}, {1, 1}, {1, 0}, {0, 1}, {0, 0},
}};

struct HiddenVarSystem {
  // Nine trace-condition entries then det(E), in variables (x, y, z), w = 1.
  std::vector<IntPolynomial> equations;
  // C(z): 10x10 univariate polynomials, row-major.
  std::vector<IntPolynomial> c;
  IntPolynomial g{1};
};

struct LiftedRoot {
  int seed = 0;
  mpz_class value;
  int iterations = 0;
};

// Exact integer homogeneous point pair, before any reduction.
struct PointPair {
  std::array<mpz_class, 3> u;
  std::array<mpz_class, 3> v;
};

// Row with entry 3i + j = u_i v_j, so that row . vec(E) = u^T E v.
IntVector EpipolarRow(const Correspondence& c);
// Throws Error(kTooManyPoints) beyond nine rows.
ResidueMatrix BuildEpipolarMatrix(const std::vector<Correspondence>& corrs,
                                  int precision);

// Lifts the mod-2 nullspace of A to precision N and packs it as matrices.
// Throws Error(kRankDrop) if A mod 2 does not have rank `expected_rank` or
// unit-pivot elimination fails.
PencilBasis LiftPencil(const ResidueMatrix& a, int expected_rank, int precision);

std::optional<MinorIndex> FindUnitMinor(const Mat3& e);
mpz_class DeterminantMod(const Mat3& e, int precision);

EssentialCandidate Solve8pt(const ResidueMatrix& a, int precision);
EssentialCandidate Solve8pt(const std::vector<Correspondence>& corrs,
                            int precision);

// h(x) = det(x E1 + (1 - x) E2) with coefficients reduced mod 2^N.
CubicCoeffs PencilCubic(const Mat3& e1, const Mat3& e2, int precision);
CubicRoots CubicRootConditions(const CubicCoeffs& h);

std::vector<EssentialCandidate> Solve7ptFromPencil(const PencilBasis& pencil,
                                                   int precision);
std::vector<EssentialCandidate> Solve7pt(const ResidueMatrix& a, int precision);
std::vector<EssentialCandidate> Solve7pt(
    const std::vector<Correspondence>& corrs, int precision);

HiddenVarSystem BuildHiddenVarSystem(const PencilBasis& pencil);
// det C(z) by evaluation at 31 integers and exact interpolation.
IntPolynomial DetPoly(const std::vector<IntPolynomial>& c);
// Exact determinant of a square integer matrix (fraction-free elimination).
mpz_class IntegerDeterminant(std::vector<IntVector> m);

// p known modulo 2^precision, divided by the largest power of two dividing
// every coefficient. The quotient is known modulo 2^(precision - content);
// content == precision means p vanishes at this precision.
struct PrimitivePart {
  IntPolynomial poly{1};
  int content = 0;
  int precision = 0;
};
PrimitivePart PrimitivePart2(const IntPolynomial& p, int precision);

// Simple mod-2 roots of g lifted to precision N. Throws Error(kNoLiftableRoot)
// when there are none.
std::vector<LiftedRoot> LiftSimpleRoots(const IntPolynomial& g, int precision);

// Works from the pencil's digits only. The cubics and g = det C(z) carry
// powers of two that are divided out before lifting, so each candidate's
// precision is the pencil precision minus those digits.
std::vector<EssentialCandidate> Solve5ptFromPencil(const PencilBasis& pencil);
std::vector<EssentialCandidate> Solve5pt(const ResidueMatrix& a, int precision);
std::vector<EssentialCandidate> Solve5pt(
    const std::vector<Correspondence>& corrs, int precision);

// Runs the solver for `method` on A mod 2^precision; the eight-point result
// is wrapped in a list.
std::vector<EssentialCandidate> SolveWith(Method method, const ResidueMatrix& a,
                                          int precision);

// Solves from exact integer correspondences, raising the working precision
// until every candidate is known to `precision` digits, then truncates to it.
std::vector<EssentialCandidate> SolveToPrecision(
    Method method, const std::vector<PointPair>& pairs, int precision);

// Candidate reduced to k <= its precision.
EssentialCandidate TruncateCandidate(const EssentialCandidate& candidate, int k);

struct UnitScale {
  bool equal = false;
  mpz_class lambda;
};
// E = lambda F (mod 2^N) for a unit lambda taken from F's first unit entry.
UnitScale EqualUpToUnit(const Mat3& e, const Mat3& f, int precision);

struct ResidualReport {
  std::vector<int> epipolar_valuations;
  int det_valuation = 0;
  std::array<int, 9> trace_valuations{};
  bool has_unit_minor = false;
  // Every residual vanishes to the candidate's precision.
  bool ok = false;
};
ResidualReport VerifyCandidate(const EssentialCandidate& candidate,
                               const std::vector<Correspondence>& corrs);

}  // namespace dyadic
