#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "idealkit/error.hpp"

namespace idealkit {

/// Hard ceiling on variables per table; the spin alphabet uses at most 8
/// (7 spin symbols plus one adjoined unknown).
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with one entry per variable of the owning table.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const noexcept { return size_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& rhs) const;
  /// Exact quotient; requires rhs.divides(*this).
  Monomial operator/(const Monomial& rhs) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  /// Same exponents on a larger table (new variables get exponent 0).
  Monomial extended(std::size_t nvars) const;

  std::vector<unsigned> exponents() const {
    return std::vector<unsigned>(exp_.begin(), exp_.begin() + size_);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.size_ == b.size_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint8_t size_ = 0;
  std::uint32_t degree_ = 0;
};

enum class OrderKind { Lex, GrLex, GrevLex };

const char* to_string(OrderKind kind);

/// Admissible monomial order with an explicit variable priority:
/// priority[0] is the most significant variable.
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::vector<std::size_t> priority);

  static TermOrder lex(std::size_t nvars);
  static TermOrder grlex(std::size_t nvars);
  static TermOrder grevlex(std::size_t nvars);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t size() const noexcept { return priority_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Same order on one more variable, which becomes least significant.
  TermOrder extended() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> priority_;
};

/// Canonical storage order: graded reverse lexicographic with the table's
/// declaration order as priority.
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept;

}  // namespace idealkit

template <>
struct std::hash<idealkit::Monomial> {
  std::size_t operator()(const idealkit::Monomial& m) const noexcept { return m.hash(); }
};
