#include "idealkit/monomial.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace idealkit {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<std::uint16_t>::max();

void check_size(std::size_t n) {
  if (n > kMaxVariables) {
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_size(nvars);
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > kMaxExponent) throw Error(ErrorKind::ResourceLimit, "exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    const unsigned e = unsigned{exp_[i]} + rhs.exp_[i];
    if (e > kMaxExponent) throw Error(ErrorKind::ResourceLimit, "exponent overflow");
    out.exp_[i] = static_cast<std::uint16_t>(e);
  }
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out.exp_[i] = static_cast<std::uint16_t>(exp_[i] - rhs.exp_[i]);
  }
  out.degree_ = degree_ - rhs.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    out.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    out.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::extended(std::size_t nvars) const {
  Monomial out(nvars);
  for (std::size_t i = 0; i < size_; ++i) out.exp_[i] = exp_[i];
  out.degree_ = degree_;
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (std::size_t v : priority_) {
    if (v >= priority_.size() || seen[v]) {
      throw Error(ErrorKind::InvalidArgument, "term order priority is not a permutation");
    }
    seen[v] = true;
  }
}

namespace {
std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}
}  // namespace

TermOrder TermOrder::lex(std::size_t nvars) { return {OrderKind::Lex, identity(nvars)}; }
TermOrder TermOrder::grlex(std::size_t nvars) { return {OrderKind::GrLex, identity(nvars)}; }
TermOrder TermOrder::grevlex(std::size_t nvars) { return {OrderKind::GrevLex, identity(nvars)}; }

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != OrderKind::Lex && a.degree() != b.degree()) {
    return a.degree() <=> b.degree();
  }
  if (kind_ == OrderKind::GrevLex) {
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::extended() const {
  auto p = priority_;
  p.push_back(p.size());
  return {kind_, std::move(p)};
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace idealkit
