#include "idealkit/scalars.hpp"

#include <limits>
#include <tuple>
#include <utility>
#include <vector>

namespace idealkit {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / value_);
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& out, const Rational& r) {
  return out << r.to_string();
}

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a usable prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

FpElement::FpElement(std::int64_t value, Prime p) : modulus_(p.value()) {
  std::int64_t r = value % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  value_ = static_cast<std::uint32_t>(r);
}

void FpElement::require_same_field(const FpElement& other) const {
  if (modulus_ != other.modulus_) {
    throw Error(ErrorKind::InvalidArgument, "mixing residues of different primes");
  }
}

FpElement FpElement::operator-() const {
  return FpElement(value_ == 0 ? 0 : modulus_ - value_, modulus_, Unchecked{});
}

FpElement& FpElement::operator+=(const FpElement& rhs) {
  require_same_field(rhs);
  std::uint64_t s = std::uint64_t{value_} + rhs.value_;
  if (s >= modulus_) s -= modulus_;
  value_ = static_cast<std::uint32_t>(s);
  return *this;
}

FpElement& FpElement::operator-=(const FpElement& rhs) {
  require_same_field(rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_
                                : static_cast<std::uint32_t>(
                                      std::uint64_t{value_} + modulus_ - rhs.value_);
  return *this;
}

FpElement& FpElement::operator*=(const FpElement& rhs) {
  require_same_field(rhs);
  value_ = static_cast<std::uint32_t>(std::uint64_t{value_} * rhs.value_ % modulus_);
  return *this;
}

FpElement& FpElement::operator/=(const FpElement& rhs) {
  return *this *= fp_inv(rhs);
}

std::ostream& operator<<(std::ostream& out, const FpElement& a) {
  return out << a.value();
}

FpElement fp_inv(const FpElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero mod p");
  std::int64_t old_r = a.modulus(), r = a.value();
  std::int64_t old_s = 0, s = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  // old_r == 1 since the modulus is prime; old_s is the inverse.
  std::int64_t inv = old_s % static_cast<std::int64_t>(a.modulus());
  if (inv < 0) inv += a.modulus();
  return FpElement(static_cast<std::uint32_t>(inv), a.modulus(), FpElement::Unchecked{});
}

FpElement reduce_mod_p(const Rational& a, Prime p) {
  const unsigned long m = p.value();
  const unsigned long den = mpz_fdiv_ui(a.denominator().get_mpz_t(), m);
  if (den == 0) {
    throw Error(ErrorKind::BadReduction,
                std::to_string(m) + " divides the denominator of " + a.to_string());
  }
  const unsigned long num = mpz_fdiv_ui(a.numerator().get_mpz_t(), m);
  return FpElement(static_cast<std::int64_t>(num), p) /
         FpElement(static_cast<std::int64_t>(den), p);
}

std::vector<std::uint32_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = lo + 1; n < hi && out.size() < count; ++n) {
    if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

}  // namespace idealkit
