#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "idealkit/error.hpp"

namespace idealkit {

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact rational number in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  /// Throws DivisionByZero when `den` is zero.
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DivisionByZero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// "n" or "n/d" with a leading '-' for negatives.
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& out, const Rational& r);

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

/// Deterministic trial-division primality test (desk-scale inputs).
bool is_prime(std::uint64_t n);

/// A validated prime below 2^32, so that products of residues fit in 64 bits.
class Prime {
 public:
  /// Throws Error{NotPrime} for non-primes or values >= 2^32.
  explicit Prime(std::uint64_t p);
  std::uint32_t value() const noexcept { return p_; }
  friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }
  friend auto operator<=>(Prime a, Prime b) noexcept { return a.p_ <=> b.p_; }

 private:
  std::uint32_t p_;
};

/// Residue class modulo a prime.
class FpElement {
 public:
  FpElement(std::int64_t value, Prime p);
  static FpElement zero(Prime p) { return FpElement(0, p); }
  static FpElement one(Prime p) { return FpElement(1, p); }

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  Prime prime() const { return Prime(modulus_); }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  FpElement operator-() const;
  FpElement& operator+=(const FpElement& rhs);
  FpElement& operator-=(const FpElement& rhs);
  FpElement& operator*=(const FpElement& rhs);
  /// Throws DivisionByZero.
  FpElement& operator/=(const FpElement& rhs);

  friend FpElement operator+(FpElement a, const FpElement& b) { return a += b; }
  friend FpElement operator-(FpElement a, const FpElement& b) { return a -= b; }
  friend FpElement operator*(FpElement a, const FpElement& b) { return a *= b; }
  friend FpElement operator/(FpElement a, const FpElement& b) { return a /= b; }
  friend bool operator==(const FpElement& a, const FpElement& b) noexcept {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  struct Unchecked {};
  FpElement(std::uint32_t value, std::uint32_t modulus, Unchecked)
      : value_(value), modulus_(modulus) {}
  void require_same_field(const FpElement& other) const;

  std::uint32_t value_;
  std::uint32_t modulus_;

  friend FpElement fp_inv(const FpElement& a);
};

std::ostream& operator<<(std::ostream& out, const FpElement& a);

/// Multiplicative inverse by extended Euclid. Throws DivisionByZero on 0.
FpElement fp_inv(const FpElement& a);

/// numerator * denominator^-1 mod p. Throws BadReduction when p divides
/// the denominator.
FpElement reduce_mod_p(const Rational& a, Prime p);

/// All primes in the open interval (lo, hi), ascending, at most `count`.
std::vector<std::uint32_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          std::size_t count);

}  // namespace idealkit
