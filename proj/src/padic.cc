#include "dyadic/padic.h"

#include <algorithm>

#include "dyadic/status.h"

namespace dyadic {

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kPrimeMismatch:
      return "PrimeMismatch";
    case Status::kNonUnit:
      return "NonUnit";
    case Status::kOutOfRange:
      return "OutOfRange";
    case Status::kDimensionMismatch:
      return "DimensionMismatch";
    case Status::kRankDeficient:
      return "RankDeficient";
    case Status::kRankDrop:
      return "RankDrop";
    case Status::kTooManyPoints:
      return "TooManyPoints";
    case Status::kRankTestFailed:
      return "RankTestFailed";
    case Status::kNoLiftableRoot:
      return "NoLiftableRoot";
    case Status::kXYRecoveryFailed:
      return "XYRecoveryFailed";
    case Status::kDegreeAnomaly:
      return "DegreeAnomaly";
    case Status::kMalformedInput:
      return "MalformedInput";
  }
  return "Unknown";
}

mpz_class PrimePower(unsigned prime, int exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), prime, static_cast<unsigned long>(exponent));
  return result;
}

mpz_class ReduceMod(const mpz_class& n, const mpz_class& modulus) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

mpz_class Mod2k(const mpz_class& n, int precision) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), n.get_mpz_t(),
                  static_cast<mp_bitcnt_t>(precision));
  return r;
}

int TwoAdicValuation(const mpz_class& n, int cap) {
  if (n == 0) return cap;
  const auto v = static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
  return std::min(v, cap);
}

TruncatedPadic TruncatedPadic::FromInteger(const mpz_class& n, unsigned prime,
                                           int precision) {
  if (precision < 1) {
    throw Error(Status::kOutOfRange, "precision must be at least 1");
  }
  if (prime < 2) {
    throw Error(Status::kOutOfRange, "prime must be at least 2");
  }
  return TruncatedPadic(prime, precision,
                        ReduceMod(n, PrimePower(prime, precision)));
}

TruncatedPadic TruncatedPadic::FromDigits(const std::vector<unsigned>& digits,
                                          unsigned prime) {
  mpz_class residue = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= prime) {
      throw Error(Status::kOutOfRange, "digit exceeds prime");
    }
    residue = residue * prime + *it;
  }
  return FromInteger(residue, prime, static_cast<int>(digits.size()));
}

TruncatedPadic TruncatedPadic::Parse(const std::string& text) {
  const auto first = text.find(':');
  const auto second =
      first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) {
    throw Error(Status::kMalformedInput, "expected p:N:digits, got " + text);
  }
  unsigned prime = 0;
  int precision = 0;
  try {
    prime = static_cast<unsigned>(std::stoul(text.substr(0, first)));
    precision = std::stoi(text.substr(first + 1, second - first - 1));
  } catch (const std::exception&) {
    throw Error(Status::kMalformedInput, "bad digit-string header: " + text);
  }
  const std::string body = text.substr(second + 1);
  if (prime < 2 || prime > 10 || precision < 1 ||
      body.size() != static_cast<size_t>(precision)) {
    throw Error(Status::kMalformedInput, "inconsistent digit string: " + text);
  }
  std::vector<unsigned> digits;
  digits.reserve(body.size());
  for (const char c : body) {
    if (c < '0' || c > '9') {
      throw Error(Status::kMalformedInput, "non-digit character in " + text);
    }
    digits.push_back(static_cast<unsigned>(c - '0'));
  }
  try {
    return FromDigits(digits, prime);
  } catch (const Error&) {
    throw Error(Status::kMalformedInput, "digit out of range in " + text);
  }
}

void TruncatedPadic::CheckPrime(const TruncatedPadic& other) const {
  if (prime_ != other.prime_) {
    throw Error(Status::kPrimeMismatch,
                std::to_string(prime_) + " vs " + std::to_string(other.prime_));
  }
}

TruncatedPadic TruncatedPadic::operator+(const TruncatedPadic& other) const {
  CheckPrime(other);
  return FromInteger(residue_ + other.residue_, prime_,
                     std::min(precision_, other.precision_));
}

TruncatedPadic TruncatedPadic::operator-(const TruncatedPadic& other) const {
  CheckPrime(other);
  return FromInteger(residue_ - other.residue_, prime_,
                     std::min(precision_, other.precision_));
}

TruncatedPadic TruncatedPadic::operator*(const TruncatedPadic& other) const {
  CheckPrime(other);
  return FromInteger(residue_ * other.residue_, prime_,
                     std::min(precision_, other.precision_));
}

TruncatedPadic TruncatedPadic::operator-() const {
  return FromInteger(-residue_, prime_, precision_);
}

PadicNorm TruncatedPadic::Valuation() const {
  if (residue_ == 0) return {precision_, true};
  int k = 0;
  mpz_class rest = residue_;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), prime_) != 0) {
    rest /= prime_;
    ++k;
  }
  return {k, false};
}

bool TruncatedPadic::IsUnit() const {
  return mpz_divisible_ui_p(residue_.get_mpz_t(), prime_) == 0;
}

TruncatedPadic TruncatedPadic::InvertUnit() const {
  if (!IsUnit()) {
    throw Error(Status::kNonUnit, residue_.get_str() + " is divisible by " +
                                      std::to_string(prime_));
  }
  mpz_class inverse;
  const mpz_class mod = modulus();
  mpz_invert(inverse.get_mpz_t(), residue_.get_mpz_t(), mod.get_mpz_t());
  return TruncatedPadic(prime_, precision_, ReduceMod(inverse, mod));
}

TruncatedPadic TruncatedPadic::Truncate(int k) const {
  if (k < 1 || k > precision_) {
    throw Error(Status::kOutOfRange, "cannot truncate precision " +
                                         std::to_string(precision_) + " to " +
                                         std::to_string(k));
  }
  return FromInteger(residue_, prime_, k);
}

std::vector<unsigned> TruncatedPadic::Digits() const {
  std::vector<unsigned> digits;
  digits.reserve(static_cast<size_t>(precision_));
  mpz_class rest = residue_;
  for (int i = 0; i < precision_; ++i) {
    digits.push_back(
        static_cast<unsigned>(mpz_fdiv_q_ui(rest.get_mpz_t(),
                                            rest.get_mpz_t(), prime_)));
  }
  return digits;
}

std::string TruncatedPadic::ToString() const {
  std::string text = std::to_string(prime_) + ":" +
                     std::to_string(precision_) + ":";
  for (const unsigned d : Digits()) {
    text.push_back(static_cast<char>('0' + d));
  }
  return text;
}

bool TruncatedPadic::EqualsAtCommonPrecision(
    const TruncatedPadic& other) const {
  CheckPrime(other);
  const int k = std::min(precision_, other.precision_);
  return Truncate(k).residue_ == other.Truncate(k).residue_;
}

}  // namespace dyadic
