#include "dyadic/hensel.h"

#include <gtest/gtest.h>

#include <random>

#include "dyadic/status.h"

namespace dyadic {
namespace {

IntPolynomial X(int vars, int i) { return IntPolynomial::Variable(vars, i); }
IntPolynomial C(int vars, long c) { return IntPolynomial::Constant(vars, c); }

// X^2 + X + 2
IntPolynomial Quadratic() { return IntPolynomial::Univariate({2, 1, 1}); }

TEST(EvalMod, SpecValues) {
  EXPECT_EQ(EvalMod(Quadratic(), {0}, 1), 0);
  EXPECT_EQ(EvalMod(Quadratic(), {1}, 2), 0);
  EXPECT_EQ(EvalMod(C(1, 1), {9}, 5), 1);
  EXPECT_THROW(EvalMod(Quadratic(), {0, 1}, 3), Error);
}

TEST(JacobianMod2, SpecValues) {
  EXPECT_EQ(JacobianMod2(PolySystem({Quadratic()}), {0}), (BitMatrix{{1}}));
  EXPECT_EQ(JacobianMod2(PolySystem({X(2, 0) * X(2, 1)}), {0, 0}),
            (BitMatrix{{0, 0}}));
  const PolySystem linear({X(2, 0) + X(2, 1), X(2, 1)});
  EXPECT_EQ(JacobianMod2(linear, {3, 8}), (BitMatrix{{1, 1}, {0, 1}}));
}

TEST(PolySystem, RejectsMoreEquationsThanVariables) {
  EXPECT_THROW(PolySystem({X(1, 0), X(1, 0)}), Error);
}

TEST(LiftStep, SpecValues) {
  const PolySystem f({Quadratic()});
  EXPECT_EQ(LiftStep(f, {0}, 2), (IntVector{2}));
  EXPECT_EQ(LiftStep(f, {2}, 3), (IntVector{2}));
  try {
    LiftStep(PolySystem({X(1, 0) * X(1, 0)}), {0}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.status(), Status::kRankDeficient);
  }
}

TEST(Lift, SpecValues) {
  const PolySystem f({Quadratic()});
  EXPECT_EQ(Lift(f, {0}, 4).Final(), (IntVector{10}));
  EXPECT_EQ(Lift(f, {1}, 4).Final(), (IntVector{5}));
  EXPECT_EQ(Lift(PolySystem({X(1, 0) - C(1, 7)}), {1}, 3).Final(), (IntVector{7}));
  EXPECT_EQ(Lift(f, {0}, 4).steps(), 3);
  EXPECT_EQ(Lift(f, {0}, 1).steps(), 0);
}

TEST(Lift, SeedMustBeARootMod2) {
  try {
    Lift(PolySystem({X(1, 0) - C(1, 7)}), {0}, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.status(), Status::kNoLiftableRoot);
  }
}

TEST(UnivariateRootsMod2, SpecValues) {
  EXPECT_EQ(UnivariateRootsMod2(IntPolynomial::Univariate({0, 1, 1})),
            (std::vector<Mod2Root>{{0, true}, {1, true}}));
  EXPECT_EQ(UnivariateRootsMod2(IntPolynomial::Univariate({0, 0, 1})),
            (std::vector<Mod2Root>{{0, false}}));
  // z^10 + z + 2: g(0) = 2 and g(1) = 4 are both even, g'(z) = 10 z^9 + 1 odd.
  std::vector<mpz_class> g(11, 0);
  g[10] = 1;
  g[1] = 1;
  g[0] = 2;
  EXPECT_EQ(UnivariateRootsMod2(IntPolynomial::Univariate(g)),
            (std::vector<Mod2Root>{{0, true}, {1, true}}));
}

// Root tests phrased on coefficients: 0 is a root iff a0 is even and simple
// iff a1 is odd; 1 is a root iff the number of odd coefficients is even and
// simple iff the odd-indexed coefficients have odd sum.
TEST(UnivariateRootsMod2, AgreesWithCoefficientParity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<mpz_class> coeffs(1 + trial % 11);
    for (auto& c : coeffs) c = static_cast<long>(rng() % 9) - 4;
    if (coeffs.back() == 0) coeffs.back() = 1;
    int odd = 0, odd_indexed = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      const int bit = mpz_odd_p(coeffs[i].get_mpz_t()) ? 1 : 0;
      odd += bit;
      if (i % 2 == 1) odd_indexed += bit;
    }
    const bool a0_odd = mpz_odd_p(coeffs[0].get_mpz_t());
    const bool a1_odd = coeffs.size() > 1 && mpz_odd_p(coeffs[1].get_mpz_t());
    std::vector<Mod2Root> expected;
    if (!a0_odd) expected.push_back({0, a1_odd});
    if (odd % 2 == 0) expected.push_back({1, odd_indexed % 2 == 1});
    EXPECT_EQ(UnivariateRootsMod2(IntPolynomial::Univariate(coeffs)), expected);
  }
}

// A random 2x2 system with a planted root whose Jacobian is a unit mod 2.
struct PlantedSystem {
  PolySystem system;
  IntVector root;
};

PlantedSystem RandomPlantedSystem(std::mt19937_64& rng, int precision) {
  std::uniform_int_distribution<int> coeff(-8, 8);
  const long modulus = 1L << precision;
  while (true) {
    const IntVector root = {static_cast<long>(rng() % modulus),
                            static_cast<long>(rng() % modulus)};
    std::vector<IntPolynomial> eqs;
    for (int i = 0; i < 2; ++i) {
      IntPolynomial f(2);
      for (int a = 0; a <= 2; ++a) {
        for (int b = 0; a + b <= 2; ++b) f.AddTerm({a, b}, coeff(rng));
      }
      eqs.push_back(f - IntPolynomial::Constant(2, f.Evaluate(root)));
    }
    PolySystem system(eqs);
    const IntVector seed = {Mod2k(root[0], 1), Mod2k(root[1], 1)};
    if (RrefMod2(JacobianMod2(system, seed)).rank == 2) return {system, root};
  }
}

TEST(Lift, UniqueSolutionMatchesBruteForce) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const PlantedSystem planted = RandomPlantedSystem(rng, n);
    const IntVector seed = {Mod2k(planted.root[0], 1), Mod2k(planted.root[1], 1)};
    const LiftTrace trace = Lift(planted.system, seed, n);

    std::vector<IntVector> matches;
    for (long x = 0; x < (1L << n); ++x) {
      for (long y = 0; y < (1L << n); ++y) {
        if (x % 2 != seed[0] || y % 2 != seed[1]) continue;
        const IntVector point = {x, y};
        const IntVector values = planted.system.EvalMod(point, n);
        if (values[0] == 0 && values[1] == 0) matches.push_back(point);
      }
    }
    ASSERT_EQ(matches.size(), 1u) << "trial " << trial;
    EXPECT_EQ(trace.Final(), matches[0]);
    EXPECT_EQ(trace.Final()[0], Mod2k(planted.root[0], n));
  }
}

TEST(Lift, EveryStepIsSoundAndCompatible) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 12;
    const PlantedSystem planted = RandomPlantedSystem(rng, n);
    const IntVector seed = {Mod2k(planted.root[0], 1), Mod2k(planted.root[1], 1)};
    const LiftTrace trace = Lift(planted.system, seed, n);
    ASSERT_EQ(trace.approximations.size(), static_cast<size_t>(n));
    EXPECT_EQ(trace.steps(), n - 1);
    for (int k = 1; k <= n; ++k) {
      const IntVector& xk = trace.approximations[k - 1];
      for (const auto& v : planted.system.EvalMod(xk, k)) EXPECT_EQ(v, 0);
      for (int j = 1; j <= k; ++j) {
        const IntVector& xj = trace.approximations[j - 1];
        for (int c = 0; c < 2; ++c) EXPECT_EQ(Mod2k(xk[c] - xj[c], j), 0);
      }
    }
  }
}

TEST(Lift, UnderdeterminedSystemFindsABranch) {
  // x + y^2 + 1 = 0: one equation in two unknowns.
  const PolySystem f({X(2, 0) + X(2, 1) * X(2, 1) + C(2, 1)});
  const LiftTrace trace = Lift(f, {1, 0}, 10);
  EXPECT_EQ(f.EvalMod(trace.Final(), 10), (IntVector{0}));
}

// Adding 2^N G to the system leaves the first N levels of the trace alone.
TEST(Lift, StableUnderHighOrderPerturbation) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 12;
    const PlantedSystem planted = RandomPlantedSystem(rng, n + 4);
    std::vector<IntPolynomial> perturbed;
    for (const auto& f : planted.system.equations()) {
      IntPolynomial g(2);
      for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 3; ++b) g.AddTerm({a, b}, coeff(rng));
      }
      perturbed.push_back(f + g.Scaled(PrimePower(2, n)));
    }
    const IntVector seed = {Mod2k(planted.root[0], 1), Mod2k(planted.root[1], 1)};
    const LiftTrace a = Lift(planted.system, seed, n);
    const LiftTrace b = Lift(PolySystem(perturbed), seed, n);
    EXPECT_EQ(a.approximations, b.approximations);
    EXPECT_EQ(a.corrections, b.corrections);
  }
}

TEST(Lift, SeedIsReducedMod2) {
  const PolySystem f({Quadratic()});
  EXPECT_EQ(Lift(f, {2}, 4).Final(), (IntVector{10}));
}

}  // namespace
}  // namespace dyadic
