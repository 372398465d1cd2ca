#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace dyadic {

using Exponents = std::vector<int>;

// Sparse polynomial with integer coefficients in a fixed number of
// variables. Zero coefficients are never stored.
class IntPolynomial {
 public:
  explicit IntPolynomial(int num_vars = 1) : num_vars_(num_vars) {}

  static IntPolynomial Constant(int num_vars, const mpz_class& c);
  static IntPolynomial Variable(int num_vars, int index);
  // Univariate polynomial from coefficients c[0] + c[1] z + ...
  static IntPolynomial Univariate(const std::vector<mpz_class>& coeffs);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }

  void AddTerm(const Exponents& exponents, const mpz_class& coeff);
  mpz_class Coefficient(const Exponents& exponents) const;

  // Total degree; -1 for the zero polynomial.
  int TotalDegree() const;
  int Degree(int var) const;

  IntPolynomial Derivative(int var) const;
  mpz_class Evaluate(const std::vector<mpz_class>& x) const;
  // Exact evaluation reduced into [0, 2^k).
  mpz_class EvalMod(const std::vector<mpz_class>& x, int k) const;
  // Substitutes `value` for variable `var`; the variable count is unchanged.
  IntPolynomial Substitute(int var, const mpz_class& value) const;
  // Coefficients reduced into [0, 2^k).
  IntPolynomial ReduceCoefficients(int k) const;
  // Dense coefficient list of a univariate polynomial.
  std::vector<mpz_class> UnivariateCoefficients() const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial Scaled(const mpz_class& c) const;

  std::string ToString() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void CheckVars(const IntPolynomial& other) const;

  int num_vars_;
  std::map<Exponents, mpz_class> terms_;
};

inline IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p) {
  return p.Scaled(c);
}

}  // namespace dyadic
