#include "dyadic/pose.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "dyadic/status.h"

namespace dyadic {
namespace {

std::array<TruncatedPadic, 3> NormalizePoint(const std::array<mpz_class, 3>& p,
                                             int precision) {
  int shift = -1;
  for (const auto& c : p) {
    if (c == 0) continue;
    const int v = TwoAdicValuation(c, 1 << 30);
    shift = shift < 0 ? v : std::min(shift, v);
  }
  if (shift < 0) {
    throw Error(Status::kMalformedInput, "zero homogeneous point");
  }
  std::array<TruncatedPadic, 3> out;
  for (int i = 0; i < 3; ++i) {
    mpz_class q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), p[i].get_mpz_t(),
                    static_cast<mp_bitcnt_t>(shift));
    out[i] = TruncatedPadic::FromInteger(q, 2, precision);
  }
  return out;
}

Mat3 VectorToMat3(const IntVector& v) {
  Mat3 m;
  std::copy(v.begin(), v.end(), m.begin());
  return m;
}

std::string BitString(const BitVector& bits) {
  std::string s;
  for (const auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// Keeps candidates with a rank-2 witness; throws Error(kRankTestFailed) if
// there were candidates but none survived.
std::vector<EssentialCandidate> KeepWitnessed(
    std::vector<EssentialCandidate> all) {
  std::vector<EssentialCandidate> kept;
  for (auto& c : all) {
    if (c.valid) kept.push_back(std::move(c));
  }
  if (kept.empty() && !all.empty()) {
    throw Error(Status::kRankTestFailed,
                "no candidate has a unit 2x2 minor with vanishing determinant");
  }
  return kept;
}

void SetWitness(EssentialCandidate& candidate) {
  candidate.witness = FindUnitMinor(candidate.e);
  candidate.valid = candidate.witness.has_value() &&
                    DeterminantMod(candidate.e, candidate.precision) == 0;
}

// Drops variable `var` (which must no longer occur).
IntPolynomial DropVariable(const IntPolynomial& p, int var) {
  IntPolynomial out(p.num_vars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != 0) throw std::logic_error("variable still occurs");
    Exponents reduced;
    for (int i = 0; i < p.num_vars(); ++i) {
      if (i != var) reduced.push_back(e[i]);
    }
    out.AddTerm(reduced, c);
  }
  return out;
}

Mat3Of<IntPolynomial> PencilPolynomials(const PencilBasis& pencil) {
  // x E1 + y E2 + z E3 + E4 in variables (x, y, z).
  Mat3Of<IntPolynomial> e;
  for (int i = 0; i < 9; ++i) {
    IntPolynomial entry = IntPolynomial::Constant(3, pencil.matrices[3][i]);
    for (int v = 0; v < 3; ++v) {
      entry += IntPolynomial::Variable(3, v).Scaled(pencil.matrices[v][i]);
    }
    e[i] = std::move(entry);
  }
  return e;
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kEightPoint:
      return "8pt";
    case Method::kSevenPoint:
      return "7pt";
    case Method::kFivePoint:
      return "5pt";
  }
  return "unknown";
}

std::optional<Method> ParseMethod(std::string_view name) {
  if (name == "8pt") return Method::kEightPoint;
  if (name == "7pt") return Method::kSevenPoint;
  if (name == "5pt") return Method::kFivePoint;
  return std::nullopt;
}

Correspondence Correspondence::FromIntegers(const std::array<mpz_class, 3>& u,
                                            const std::array<mpz_class, 3>& v,
                                            int precision) {
  return {NormalizePoint(u, precision), NormalizePoint(v, precision)};
}

int Correspondence::precision() const {
  int p = u[0].precision();
  for (const auto& c : u) p = std::min(p, c.precision());
  for (const auto& c : v) p = std::min(p, c.precision());
  return p;
}

IntVector EpipolarRow(const Correspondence& c) {
  IntVector row(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) row[3 * i + j] = (c.u[i] * c.v[j]).residue();
  }
  return row;
}

ResidueMatrix BuildEpipolarMatrix(const std::vector<Correspondence>& corrs,
                                  int precision) {
  if (corrs.size() > 9) {
    throw Error(Status::kTooManyPoints,
                std::to_string(corrs.size()) + " correspondences (at most 9)");
  }
  ResidueMatrix a(static_cast<int>(corrs.size()), 9, precision);
  for (int r = 0; r < a.rows(); ++r) {
    if (corrs[r].precision() < precision) {
      throw Error(Status::kOutOfRange, "correspondence precision below target");
    }
    const IntVector row = EpipolarRow(corrs[r]);
    for (int c = 0; c < 9; ++c) a.Set(r, c, row[c]);
  }
  return a;
}

PencilBasis LiftPencil(const ResidueMatrix& a, int expected_rank,
                       int precision) {
  if (precision < 1 || precision > a.precision()) {
    throw Error(Status::kOutOfRange, "precision outside [1, data precision]");
  }
  const BitMatrix reduced = a.Mod2();
  const int rank = RrefMod2(reduced).rank;
  if (rank != expected_rank) {
    throw Error(Status::kRankDrop, "rank of A mod 2 is " + std::to_string(rank) +
                                       ", need " + std::to_string(expected_rank));
  }
  const BitBasis basis = NullspaceMod2(reduced);
  const LiftedBasis lifted = LiftNullspace(a, basis, precision);
  PencilBasis pencil;
  pencil.precision = precision;
  pencil.iterations = lifted.iterations;
  pencil.free_positions = basis.pivot_rows;
  for (const auto& v : lifted.vectors) pencil.matrices.push_back(VectorToMat3(v));
  return pencil;
}

std::optional<MinorIndex> FindUnitMinor(const Mat3& e) {
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      int r[2], c[2], nr = 0, nc = 0;
      for (int i = 0; i < 3; ++i) {
        if (i != row) r[nr++] = i;
        if (i != col) c[nc++] = i;
      }
      const mpz_class minor = e[3 * r[0] + c[0]] * e[3 * r[1] + c[1]] -
                              e[3 * r[0] + c[1]] * e[3 * r[1] + c[0]];
      if (mpz_odd_p(minor.get_mpz_t())) return MinorIndex{row, col};
    }
  }
  return std::nullopt;
}

mpz_class DeterminantMod(const Mat3& e, int precision) {
  return Mod2k(Determinant3(e), precision);
}

EssentialCandidate Solve8pt(const ResidueMatrix& a, int precision) {
  const PencilBasis pencil = LiftPencil(a, 8, precision);
  EssentialCandidate candidate;
  candidate.e = pencil.matrices.front();
  candidate.precision = precision;
  candidate.method = Method::kEightPoint;
  BitVector bits;
  for (const auto& v : candidate.e) bits.push_back(mpz_odd_p(v.get_mpz_t()) ? 1 : 0);
  candidate.seed = "b=" + BitString(bits);
  candidate.iterations = pencil.iterations;
  SetWitness(candidate);
  return candidate;
}

EssentialCandidate Solve8pt(const std::vector<Correspondence>& corrs,
                            int precision) {
  return Solve8pt(BuildEpipolarMatrix(corrs, precision), precision);
}

CubicCoeffs PencilCubic(const Mat3& e1, const Mat3& e2, int precision) {
  Mat3Of<IntPolynomial> p;
  for (int i = 0; i < 9; ++i) p[i] = IntPolynomial::Univariate({e2[i], e1[i] - e2[i]});
  const IntPolynomial h = Determinant3(p);
  auto coeff = [&](int k) {
    return TruncatedPadic::FromInteger(h.Coefficient({k}), 2, precision);
  };
  return {coeff(3), coeff(2), coeff(1), coeff(0)};
}

CubicRoots CubicRootConditions(const CubicCoeffs& h) {
  const bool a = h.a.Truncate(1).residue() != 0;
  const bool b = h.b.Truncate(1).residue() != 0;
  const bool c = h.c.Truncate(1).residue() != 0;
  const bool d = h.d.Truncate(1).residue() != 0;
  CubicRoots roots;
  if (!d) {
    roots.zero = c;
    // h(1) = a + b + c, h'(1) = a + c (mod 2).
    roots.one = ((a + b + c) % 2 == 0) && ((a + c) % 2 == 1);
  } else if (a) {
    roots.one = !b && !c;
  } else {
    roots.one = !b && c;
  }
  return roots;
}

std::vector<EssentialCandidate> Solve7ptFromPencil(const PencilBasis& pencil,
                                                   int precision) {
  if (pencil.matrices.size() != 2) {
    throw Error(Status::kDimensionMismatch, "seven-point pencil needs 2 matrices");
  }
  const Mat3& e1 = pencil.matrices[0];
  const Mat3& e2 = pencil.matrices[1];
  const CubicCoeffs h = PencilCubic(e1, e2, precision);
  const CubicRoots roots = CubicRootConditions(h);
  if (!roots.zero && !roots.one) {
    throw Error(Status::kNoLiftableRoot, "cubic has no simple root mod 2");
  }
  const PolySystem system({IntPolynomial::Univariate(
      {h.d.residue(), h.c.residue(), h.b.residue(), h.a.residue()})});

  std::vector<EssentialCandidate> all;
  for (int root = 0; root <= 1; ++root) {
    if (!(root == 0 ? roots.zero : roots.one)) continue;
    const LiftTrace trace = Lift(system, {mpz_class(root)}, precision);
    const mpz_class& x = trace.Final()[0];
    EssentialCandidate candidate;
    for (int i = 0; i < 9; ++i) {
      candidate.e[i] = Mod2k(x * e1[i] + (1 - x) * e2[i], precision);
    }
    candidate.precision = precision;
    candidate.method = Method::kSevenPoint;
    candidate.seed = "x=" + std::to_string(root);
    candidate.iterations = trace.steps();
    SetWitness(candidate);
    all.push_back(std::move(candidate));
  }
  return KeepWitnessed(std::move(all));
}

std::vector<EssentialCandidate> Solve7pt(const ResidueMatrix& a, int precision) {
  return Solve7ptFromPencil(LiftPencil(a, 7, precision), precision);
}

std::vector<EssentialCandidate> Solve7pt(
    const std::vector<Correspondence>& corrs, int precision) {
  return Solve7pt(BuildEpipolarMatrix(corrs, precision), precision);
}

HiddenVarSystem BuildHiddenVarSystem(const PencilBasis& pencil) {
  if (pencil.matrices.size() != 4) {
    throw Error(Status::kDimensionMismatch, "five-point pencil needs 4 matrices");
  }
  const Mat3Of<IntPolynomial> e = PencilPolynomials(pencil);
  HiddenVarSystem system;
  for (auto& entry : TraceCondition(e)) system.equations.push_back(std::move(entry));
  system.equations.push_back(Determinant3(e));

  system.c.assign(100, IntPolynomial(1));
  for (int row = 0; row < 10; ++row) {
    for (const auto& [exps, coeff] : system.equations[row].terms()) {
      const auto it = std::find(kHiddenMonomials.begin(), kHiddenMonomials.end(),
                                std::array<int, 2>{exps[0], exps[1]});
      if (it == kHiddenMonomials.end()) {
        throw std::logic_error("equation term outside the monomial vector");
      }
      const auto col = static_cast<int>(it - kHiddenMonomials.begin());
      system.c[10 * row + col].AddTerm({exps[2]}, coeff);
    }
  }

  // C(z) X must reproduce every equation.
  for (int row = 0; row < 10; ++row) {
    IntPolynomial rebuilt(3);
    for (int col = 0; col < 10; ++col) {
      for (const auto& [exps, coeff] : system.c[10 * row + col].terms()) {
        rebuilt.AddTerm({kHiddenMonomials[col][0], kHiddenMonomials[col][1],
                         exps[0]},
                        coeff);
      }
    }
    if (rebuilt != system.equations[row]) {
      throw std::logic_error("C(z) X does not reproduce equation " +
                             std::to_string(row));
    }
  }
  system.g = DetPoly(system.c);
  return system;
}

mpz_class IntegerDeterminant(std::vector<IntVector> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  mpz_class previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPolynomial DetPoly(const std::vector<IntPolynomial>& c) {
  int n = 0;
  while (n * n < static_cast<int>(c.size())) ++n;
  if (n * n != static_cast<int>(c.size())) {
    throw Error(Status::kDimensionMismatch, "C(z) is not square");
  }
  for (const auto& entry : c) {
    if (entry.num_vars() != 1 || entry.Degree(0) > 3) {
      throw Error(Status::kDegreeAnomaly, "C(z) entry is not a cubic in z");
    }
  }
  // Degree of det is at most 3n; sample 3n + 1 points centred on 0.
  const int num_points = 3 * n + 1;
  std::vector<mpq_class> xs, dd;
  for (int p = 0; p < num_points; ++p) {
    const mpz_class z = p - num_points / 2;
    std::vector<IntVector> m(n, IntVector(n));
    for (int r = 0; r < n; ++r) {
      for (int col = 0; col < n; ++col) m[r][col] = c[n * r + col].Evaluate({z});
    }
    xs.emplace_back(z);
    dd.emplace_back(IntegerDeterminant(std::move(m)));
  }
  // Newton divided differences, then expand into the monomial basis.
  for (int level = 1; level < num_points; ++level) {
    for (int i = num_points - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  std::vector<mpq_class> coeffs(1, dd[num_points - 1]);
  for (int i = num_points - 2; i >= 0; --i) {
    // coeffs <- coeffs * (z - xs[i]) + dd[i]
    std::vector<mpq_class> next(coeffs.size() + 1, mpq_class(0));
    for (size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= coeffs[k] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  std::vector<mpz_class> integral;
  for (auto& q : coeffs) {
    q.canonicalize();
    if (q.get_den() != 1) {
      throw Error(Status::kDegreeAnomaly, "non-integral interpolated coefficient");
    }
    integral.push_back(q.get_num());
  }
  IntPolynomial g = IntPolynomial::Univariate(integral);
  if (g.Degree(0) > n) {
    throw Error(Status::kDegreeAnomaly,
                "det C(z) has degree " + std::to_string(g.Degree(0)));
  }
  return g;
}

PrimitivePart PrimitivePart2(const IntPolynomial& p, int precision) {
  const IntPolynomial reduced = p.ReduceCoefficients(precision);
  int content = precision;
  for (const auto& [e, c] : reduced.terms()) {
    content = std::min(content, TwoAdicValuation(c, precision));
  }
  PrimitivePart out;
  out.content = content;
  out.precision = precision - content;
  out.poly = IntPolynomial(p.num_vars());
  if (out.precision == 0) return out;
  for (const auto& [e, c] : reduced.terms()) {
    mpz_class q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), c.get_mpz_t(), static_cast<mp_bitcnt_t>(content));
    out.poly.AddTerm(e, q);
  }
  return out;
}

std::vector<LiftedRoot> LiftSimpleRoots(const IntPolynomial& g, int precision) {
  const IntPolynomial reduced = g.ReduceCoefficients(precision);
  const PolySystem system({reduced});
  std::vector<LiftedRoot> out;
  for (const Mod2Root& root : UnivariateRootsMod2(reduced)) {
    if (!root.simple) continue;
    const LiftTrace trace = Lift(system, {mpz_class(root.value)}, precision);
    out.push_back({root.value, trace.Final()[0], trace.steps()});
  }
  if (out.empty()) {
    throw Error(Status::kNoLiftableRoot, "no simple root mod 2");
  }
  return out;
}

namespace {

// Thrown when g = det C(z) is zero at the working precision; more digits of
// the data can fix this, unlike the other failures.
class VanishingDeterminant : public Error {
 public:
  explicit VanishingDeterminant(int precision)
      : Error(Status::kNoLiftableRoot,
              "det C(z) vanishes mod 2^" + std::to_string(precision)) {}
};

}  // namespace

std::vector<EssentialCandidate> Solve5ptFromPencil(const PencilBasis& pencil) {
  const HiddenVarSystem system = BuildHiddenVarSystem(pencil);
  const PrimitivePart g = PrimitivePart2(system.g, pencil.precision);
  if (g.precision == 0) throw VanishingDeterminant(pencil.precision);
  const std::vector<LiftedRoot> z_roots = LiftSimpleRoots(g.poly, g.precision);

  std::vector<EssentialCandidate> all;
  for (const LiftedRoot& z : z_roots) {
    // Equations in (x, y) that still carry information at this precision.
    std::vector<PrimitivePart> in_xy;
    for (const auto& f : system.equations) {
      PrimitivePart part =
          PrimitivePart2(DropVariable(f.Substitute(2, z.value), 2), g.precision);
      if (part.precision > 0) in_xy.push_back(std::move(part));
    }
    const int count = static_cast<int>(in_xy.size());
    for (int x0 = 0; x0 <= 1; ++x0) {
      for (int y0 = 0; y0 <= 1; ++y0) {
        const IntVector seed = {mpz_class(x0), mpz_class(y0)};
        const bool root_mod2 = std::all_of(
            in_xy.begin(), in_xy.end(),
            [&](const PrimitivePart& f) { return f.poly.EvalMod(seed, 1) == 0; });
        if (!root_mod2) continue;
        // First pair of equations whose (x, y) Jacobian is invertible mod 2.
        int first = -1, second = -1;
        for (int i = 0; i < count && first < 0; ++i) {
          for (int j = i + 1; j < count; ++j) {
            const PolySystem pair({in_xy[i].poly, in_xy[j].poly});
            if (RrefMod2(JacobianMod2(pair, seed)).rank == 2) {
              first = i;
              second = j;
              break;
            }
          }
        }
        if (first < 0) continue;
        const int n = std::min(in_xy[first].precision, in_xy[second].precision);
        const PolySystem pair({in_xy[first].poly.ReduceCoefficients(n),
                               in_xy[second].poly.ReduceCoefficients(n)});
        const LiftTrace trace = Lift(pair, seed, n);
        const mpz_class& x = trace.Final()[0];
        const mpz_class& y = trace.Final()[1];

        EssentialCandidate candidate;
        for (int i = 0; i < 9; ++i) {
          candidate.e[i] =
              Mod2k(x * pencil.matrices[0][i] + y * pencil.matrices[1][i] +
                        z.value * pencil.matrices[2][i] + pencil.matrices[3][i],
                    n);
        }
        candidate.precision = n;
        candidate.method = Method::kFivePoint;
        candidate.seed = "z=" + std::to_string(z.seed) +
                         ",x=" + std::to_string(x0) + ",y=" + std::to_string(y0);
        candidate.iterations = trace.steps();
        const auto residues = TraceCondition(candidate.e);
        const bool trace_ok = std::all_of(
            residues.begin(), residues.end(),
            [&](const mpz_class& r) { return Mod2k(r, n) == 0; });
        if (!trace_ok || DeterminantMod(candidate.e, n) != 0) continue;
        SetWitness(candidate);
        all.push_back(std::move(candidate));
      }
    }
  }
  if (all.empty()) {
    throw Error(Status::kXYRecoveryFailed,
                "no (x, y) lift satisfies all ten equations");
  }
  return KeepWitnessed(std::move(all));
}

std::vector<EssentialCandidate> Solve5pt(const ResidueMatrix& a, int precision) {
  return Solve5ptFromPencil(LiftPencil(a, 5, precision));
}

std::vector<EssentialCandidate> Solve5pt(
    const std::vector<Correspondence>& corrs, int precision) {
  return Solve5pt(BuildEpipolarMatrix(corrs, precision), precision);
}

std::vector<EssentialCandidate> SolveWith(Method method, const ResidueMatrix& a,
                                          int precision) {
  switch (method) {
    case Method::kEightPoint:
      return {Solve8pt(a, precision)};
    case Method::kSevenPoint:
      return Solve7pt(a, precision);
    case Method::kFivePoint:
      return Solve5pt(a, precision);
  }
  return {};
}

EssentialCandidate TruncateCandidate(const EssentialCandidate& candidate, int k) {
  if (k < 1 || k > candidate.precision) {
    throw Error(Status::kOutOfRange, "cannot truncate to " + std::to_string(k) +
                                         " digits");
  }
  EssentialCandidate out = candidate;
  for (auto& v : out.e) v = Mod2k(v, k);
  out.precision = k;
  // Lifting the same seed directly to k digits takes k - 1 steps.
  out.iterations = std::min(candidate.iterations, k - 1);
  SetWitness(out);
  return out;
}

std::vector<EssentialCandidate> SolveToPrecision(
    Method method, const std::vector<PointPair>& pairs, int precision) {
  auto solve_at = [&](int working) {
    std::vector<Correspondence> corrs;
    for (const auto& p : pairs) {
      corrs.push_back(Correspondence::FromIntegers(p.u, p.v, working));
    }
    return SolveWith(method, BuildEpipolarMatrix(corrs, working), working);
  };
  if (method != Method::kFivePoint) return solve_at(precision);

  constexpr int kMaxGuard = 512;
  for (int guard = 32;; guard *= 2) {
    const bool last = guard >= kMaxGuard;
    std::vector<EssentialCandidate> found;
    try {
      found = solve_at(precision + guard);
    } catch (const VanishingDeterminant&) {
      if (last) throw;
      continue;
    } catch (const Error& e) {
      // Equations that vanished at this precision may pin down (x, y) once
      // more digits are available.
      if (e.status() != Status::kXYRecoveryFailed || last) throw;
      continue;
    }
    const bool enough = std::all_of(
        found.begin(), found.end(),
        [&](const EssentialCandidate& c) { return c.precision >= precision; });
    if (!enough && !last) continue;
    std::vector<EssentialCandidate> out;
    for (const auto& c : found) {
      if (c.precision >= precision) out.push_back(TruncateCandidate(c, precision));
    }
    if (out.empty()) {
      throw Error(Status::kXYRecoveryFailed,
                  "no candidate reached " + std::to_string(precision) + " digits");
    }
    return out;
  }
}

UnitScale EqualUpToUnit(const Mat3& e, const Mat3& f, int precision) {
  UnitScale out;
  const auto unit = std::find_if(f.begin(), f.end(), [](const mpz_class& v) {
    return mpz_odd_p(v.get_mpz_t()) != 0;
  });
  if (unit == f.end()) return out;
  const auto index = unit - f.begin();
  const mpz_class inverse =
      TruncatedPadic::FromInteger(*unit, 2, precision).InvertUnit().residue();
  out.lambda = Mod2k(e[index] * inverse, precision);
  if (mpz_even_p(out.lambda.get_mpz_t())) return out;
  out.equal = true;
  for (int i = 0; i < 9; ++i) {
    if (Mod2k(e[i] - out.lambda * f[i], precision) != 0) {
      out.equal = false;
      break;
    }
  }
  return out;
}

ResidualReport VerifyCandidate(const EssentialCandidate& candidate,
                               const std::vector<Correspondence>& corrs) {
  const int n = candidate.precision;
  ResidualReport report;
  bool ok = true;
  for (const auto& c : corrs) {
    const IntVector row = EpipolarRow(c);
    mpz_class acc = 0;
    for (int i = 0; i < 9; ++i) acc += row[i] * candidate.e[i];
    const int v = TwoAdicValuation(Mod2k(acc, n), n);
    report.epipolar_valuations.push_back(v);
    ok = ok && v >= n;
  }
  report.det_valuation = TwoAdicValuation(DeterminantMod(candidate.e, n), n);
  ok = ok && report.det_valuation >= n;
  const auto trace = TraceCondition(candidate.e);
  bool trace_ok = true;
  for (int i = 0; i < 9; ++i) {
    report.trace_valuations[i] = TwoAdicValuation(Mod2k(trace[i], n), n);
    trace_ok = trace_ok && report.trace_valuations[i] >= n;
  }
  if (candidate.method == Method::kFivePoint) ok = ok && trace_ok;
  report.has_unit_minor = FindUnitMinor(candidate.e).has_value();
  report.ok = ok && report.has_unit_minor;
  return report;
}

}  // namespace dyadic
