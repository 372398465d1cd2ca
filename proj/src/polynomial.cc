#include "dyadic/polynomial.h"

#include <algorithm>
#include <sstream>

#include "dyadic/padic.h"
#include "dyadic/status.h"

namespace dyadic {

IntPolynomial IntPolynomial::Constant(int num_vars, const mpz_class& c) {
  IntPolynomial p(num_vars);
  p.AddTerm(Exponents(num_vars, 0), c);
  return p;
}

IntPolynomial IntPolynomial::Variable(int num_vars, int index) {
  IntPolynomial p(num_vars);
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  p.AddTerm(e, 1);
  return p;
}

IntPolynomial IntPolynomial::Univariate(const std::vector<mpz_class>& coeffs) {
  IntPolynomial p(1);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    p.AddTerm({static_cast<int>(i)}, coeffs[i]);
  }
  return p;
}

void IntPolynomial::AddTerm(const Exponents& exponents, const mpz_class& coeff) {
  if (static_cast<int>(exponents.size()) != num_vars_) {
    throw Error(Status::kDimensionMismatch, "exponent vector length");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class IntPolynomial::Coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int IntPolynomial::TotalDegree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (const int k : e) d += k;
    degree = std::max(degree, d);
  }
  return degree;
}

int IntPolynomial::Degree(int var) const {
  int degree = -1;
  for (const auto& [e, c] : terms_) degree = std::max(degree, e.at(var));
  return degree;
}

IntPolynomial IntPolynomial::Derivative(int var) const {
  IntPolynomial d(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents lowered = e;
    --lowered[var];
    d.AddTerm(lowered, c * e[var]);
  }
  return d;
}

mpz_class IntPolynomial::Evaluate(const std::vector<mpz_class>& x) const {
  if (static_cast<int>(x.size()) != num_vars_) {
    throw Error(Status::kDimensionMismatch,
                "expected " + std::to_string(num_vars_) + " values, got " +
                    std::to_string(x.size()));
  }
  mpz_class sum = 0;
  mpz_class power;
  for (const auto& [e, c] : terms_) {
    mpz_class term = c;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), x[i].get_mpz_t(),
                 static_cast<unsigned long>(e[i]));
      term *= power;
    }
    sum += term;
  }
  return sum;
}

mpz_class IntPolynomial::EvalMod(const std::vector<mpz_class>& x, int k) const {
  if (static_cast<int>(x.size()) != num_vars_) {
    throw Error(Status::kDimensionMismatch,
                "expected " + std::to_string(num_vars_) + " values, got " +
                    std::to_string(x.size()));
  }
  const mpz_class modulus = PrimePower(2, k);
  mpz_class sum = 0;
  mpz_class power;
  for (const auto& [e, c] : terms_) {
    mpz_class term = Mod2k(c, k);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      const mpz_class base = Mod2k(x[i], k);
      mpz_powm_ui(power.get_mpz_t(), base.get_mpz_t(),
                  static_cast<unsigned long>(e[i]), modulus.get_mpz_t());
      term = Mod2k(term * power, k);
    }
    sum += term;
  }
  return Mod2k(sum, k);
}

IntPolynomial IntPolynomial::Substitute(int var, const mpz_class& value) const {
  IntPolynomial out(num_vars_);
  mpz_class power;
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced.at(var) = 0;
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(),
               static_cast<unsigned long>(e[var]));
    out.AddTerm(reduced, c * power);
  }
  return out;
}

IntPolynomial IntPolynomial::ReduceCoefficients(int k) const {
  IntPolynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.AddTerm(e, Mod2k(c, k));
  return out;
}

std::vector<mpz_class> IntPolynomial::UnivariateCoefficients() const {
  if (num_vars_ != 1) {
    throw Error(Status::kDimensionMismatch, "polynomial is not univariate");
  }
  std::vector<mpz_class> coeffs(std::max(Degree(0) + 1, 0), mpz_class(0));
  for (const auto& [e, c] : terms_) coeffs[e[0]] = c;
  return coeffs;
}

void IntPolynomial::CheckVars(const IntPolynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw Error(Status::kDimensionMismatch, "variable count mismatch");
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  CheckVars(other);
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  CheckVars(other);
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  out += other;
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  out -= other;
  return out;
}

IntPolynomial IntPolynomial::operator-() const { return Scaled(-1); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  CheckVars(other);
  IntPolynomial out(num_vars_);
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.AddTerm(e, ca * cb);
    }
  }
  return out;
}

IntPolynomial IntPolynomial::Scaled(const mpz_class& c) const {
  IntPolynomial out(num_vars_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

std::string IntPolynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : (c < 0 ? " - " : " + "));
    if (first && c < 0) os << "-";
    os << abs(c);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      os << "*X" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

}  // namespace dyadic
