#include "dyadic/hensel.h"

#include <string>
#include <utility>

#include "dyadic/status.h"

namespace dyadic {

PolySystem::PolySystem(std::vector<IntPolynomial> equations)
    : num_vars_(equations.empty() ? 0 : equations.front().num_vars()),
      equations_(std::move(equations)) {
  for (const auto& f : equations_) {
    if (f.num_vars() != num_vars_) {
      throw Error(Status::kDimensionMismatch, "equations disagree on variables");
    }
  }
  if (num_equations() > num_vars_) {
    throw Error(Status::kDimensionMismatch,
                "more equations than variables (" +
                    std::to_string(num_equations()) + " > " +
                    std::to_string(num_vars_) + ")");
  }
}

IntVector PolySystem::EvalMod(const IntVector& x, int k) const {
  IntVector out;
  out.reserve(equations_.size());
  for (const auto& f : equations_) out.push_back(f.EvalMod(x, k));
  return out;
}

mpz_class EvalMod(const IntPolynomial& f, const IntVector& x, int k) {
  return f.EvalMod(x, k);
}

BitMatrix JacobianMod2(const PolySystem& system, const IntVector& x) {
  BitMatrix j(system.num_equations(), system.num_vars());
  for (int i = 0; i < system.num_equations(); ++i) {
    for (int v = 0; v < system.num_vars(); ++v) {
      j.Set(i, v, system[i].Derivative(v).EvalMod(x, 1) != 0);
    }
  }
  return j;
}

IntVector LiftStep(const PolySystem& system, const IntVector& x, int k) {
  if (k < 2) {
    throw Error(Status::kOutOfRange, "lift step needs k >= 2");
  }
  const IntVector values = system.EvalMod(x, k);
  BitVector a(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (TwoAdicValuation(values[i], k) < k - 1) {
      throw Error(Status::kNoLiftableRoot,
                  "point is not a solution mod 2^" + std::to_string(k - 1));
    }
    a[i] = mpz_tstbit(values[i].get_mpz_t(), k - 1);
  }
  // a = -a over GF(2).
  const BitVector t = SolveAffineMod2(JacobianMod2(system, x), a);
  IntVector lifted = x;
  for (size_t v = 0; v < lifted.size(); ++v) {
    lifted[v] = Mod2k(lifted[v], k - 1);
    if (t[v]) {
      mpz_class step = 1;
      mpz_mul_2exp(step.get_mpz_t(), step.get_mpz_t(), k - 1);
      lifted[v] += step;
    }
  }
  return lifted;
}

LiftTrace Lift(const PolySystem& system, const IntVector& seed, int precision) {
  if (static_cast<int>(seed.size()) != system.num_vars()) {
    throw Error(Status::kDimensionMismatch, "seed length");
  }
  LiftTrace trace;
  IntVector x;
  for (const auto& s : seed) x.push_back(Mod2k(s, 1));
  for (const auto& v : system.EvalMod(x, 1)) {
    if (v != 0) throw Error(Status::kNoLiftableRoot, "seed is not a root mod 2");
  }
  trace.approximations.push_back(x);
  for (int k = 2; k <= precision; ++k) {
    IntVector next = LiftStep(system, x, k);
    BitVector t(next.size());
    for (size_t v = 0; v < next.size(); ++v) {
      t[v] = mpz_tstbit(next[v].get_mpz_t(), k - 1);
    }
    trace.corrections.push_back(std::move(t));
    trace.approximations.push_back(next);
    x = std::move(next);
  }
  return trace;
}

std::vector<Mod2Root> UnivariateRootsMod2(const IntPolynomial& g) {
  if (g.num_vars() != 1) {
    throw Error(Status::kDimensionMismatch, "polynomial is not univariate");
  }
  const IntPolynomial derivative = g.Derivative(0);
  std::vector<Mod2Root> roots;
  for (int z = 0; z <= 1; ++z) {
    if (g.EvalMod({mpz_class(z)}, 1) != 0) continue;
    roots.push_back({z, derivative.EvalMod({mpz_class(z)}, 1) != 0});
  }
  return roots;
}

}  // namespace dyadic
