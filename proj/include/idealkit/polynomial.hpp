#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealkit/error.hpp"
#include "idealkit/monomial.hpp"
#include "idealkit/scalars.hpp"
#include "idealkit/variables.hpp"

namespace idealkit {

template <class C>
struct Term {
  C coeff;
  Monomial monomial;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with coefficients in a field C (Rational or FpElement).
/// Terms are kept sorted descending in canonical (grevlex) order with no zero
/// coefficients and no repeated monomials. The `unit` member is a witness of
/// the coefficient field: for Z_p it carries the prime, so that constants and
/// the zero polynomial still know where they live.
template <class C>
class Polynomial {
 public:
  using Coefficient = C;

  Polynomial(TablePtr table, C unit) : table_(std::move(table)), unit_(std::move(unit)) {
    if (!table_) throw Error(ErrorKind::InvalidArgument, "null variable table");
  }

  /// Canonicalizes: sorts, merges equal monomials and drops zeros.
  Polynomial(TablePtr table, C unit, std::vector<Term<C>> terms)
      : Polynomial(std::move(table), std::move(unit)) {
    for (const auto& t : terms) {
      if (t.monomial.size() != table_->size()) {
        throw Error(ErrorKind::TableMismatch, "monomial length differs from table size");
      }
    }
    terms_ = std::move(terms);
    canonicalize();
  }

  static Polynomial constant(TablePtr table, C unit, C value) {
    const std::size_t n = table->size();
    return Polynomial(std::move(table), std::move(unit), {{std::move(value), Monomial(n)}});
  }

  static Polynomial variable(TablePtr table, C unit, std::size_t index) {
    Monomial m(table->size());
    m.set(index, 1);
    C c = unit;
    return Polynomial(std::move(table), std::move(unit), {{std::move(c), m}});
  }

  const TablePtr& table() const noexcept { return table_; }
  const C& unit() const noexcept { return unit_; }
  C zero_coeff() const { return unit_ - unit_; }
  const std::vector<Term<C>>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  /// Coefficient of `m`, zero when absent.
  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term<C>& t, const Monomial& key) {
                                 return canonical_compare(t.monomial, key) > 0;
                               });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return zero_coeff();
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) { return *this = merge(*this, rhs, false); }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = merge(*this, rhs, true); }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = multiply(*this, rhs); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply(a, b);
  }

  Polynomial scaled(const C& c) const {
    if (c.is_zero()) return Polynomial(table_, unit_);
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }

  Polynomial shifted(const Monomial& m) const {
    Polynomial out = *this;
    // Multiplying every term by the same monomial preserves the order.
    for (auto& t : out.terms_) t.monomial = t.monomial * m;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term<C>& a, const Term<C>& b) {
      return canonical_compare(a.monomial, b.monomial) > 0;
    });
    std::vector<Term<C>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  static void require_same(const Polynomial& a, const Polynomial& b) {
    if (!same_table(a.table_, b.table_)) {
      throw Error(ErrorKind::TableMismatch, "polynomials live on different variable tables");
    }
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same(a, b);
    Polynomial out(a.table_, a.unit_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else {
        auto o = canonical_compare(a.terms_[i].monomial, b.terms_[j].monomial);
        c = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (c > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term<C> t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        out.terms_.push_back(std::move(t));
      } else {
        C s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                       : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) out.terms_.push_back({std::move(s), a.terms_[i].monomial});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    require_same(a, b);
    std::vector<Term<C>> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        products.push_back({s.coeff * t.coeff, s.monomial * t.monomial});
      }
    }
    return Polynomial(a.table_, a.unit_, std::move(products));
  }

  TablePtr table_;
  C unit_;
  std::vector<Term<C>> terms_;
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<FpElement>;

inline QPoly zero_poly(TablePtr table) { return QPoly(std::move(table), Rational(1)); }
inline QPoly constant_poly(TablePtr table, Rational c) {
  return QPoly::constant(std::move(table), Rational(1), std::move(c));
}
inline QPoly variable_poly(TablePtr table, std::size_t index) {
  return QPoly::variable(std::move(table), Rational(1), index);
}
inline QPoly variable_poly(TablePtr table, const std::string& name) {
  const std::size_t i = table->require(name);
  return QPoly::variable(std::move(table), Rational(1), i);
}

enum class PolyOp { Add, Sub, Mul };

template <class C>
Polynomial<C> poly_arith(const Polynomial<C>& f, const Polynomial<C>& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  return f;
}

/// Index of the maximal term under `ord`. Throws ZeroPolynomial.
template <class C>
std::size_t leading_index(const Polynomial<C>& f, const TermOrder& ord) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  if (ord.kind() == OrderKind::GrevLex) {
    bool identity = true;
    for (std::size_t i = 0; i < ord.size(); ++i) identity = identity && ord.priority()[i] == i;
    if (identity) return 0;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (ord.greater(f.terms()[i].monomial, f.terms()[best].monomial)) best = i;
  }
  return best;
}

template <class C>
Term<C> leading_term(const Polynomial<C>& f, const TermOrder& ord) {
  return f.terms()[leading_index(f, ord)];
}

/// Replaces every variable by its conjugation partner.
template <class C>
Polynomial<C> conjugate(const Polynomial<C>& f) {
  const auto& table = *f.table();
  std::vector<Term<C>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) m.set(table.conj(i), t.monomial[i]);
    out.push_back({t.coeff, m});
  }
  return Polynomial<C>(f.table(), f.unit(), std::move(out));
}

/// Divides by the canonical leading coefficient; zero stays zero.
template <class C>
Polynomial<C> monic(const Polynomial<C>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.unit() / f.terms().front().coeff);
}

/// c with f = c * g when one exists (both nonzero), otherwise nullopt.
template <class C>
std::optional<C> scalar_ratio(const Polynomial<C>& f, const Polynomial<C>& g) {
  if (f.is_zero() || g.is_zero() || f.size() != g.size()) return std::nullopt;
  const C c = f.terms().front().coeff / g.terms().front().coeff;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f.terms()[i].monomial == g.terms()[i].monomial)) return std::nullopt;
    if (!(f.terms()[i].coeff == c * g.terms()[i].coeff)) return std::nullopt;
  }
  return c;
}

/// q with f = q*g by repeated canonical leading-term division.
/// Throws ZeroDivisor for g = 0 and NonDivisible when a step fails.
template <class C>
Polynomial<C> exact_divide(const Polynomial<C>& f, const Polynomial<C>& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  if (!same_table(f.table(), g.table())) {
    throw Error(ErrorKind::TableMismatch, "polynomials live on different variable tables");
  }
  const Term<C>& lg = g.terms().front();
  Polynomial<C> rest = f;
  std::vector<Term<C>> quotient;
  while (!rest.is_zero()) {
    const Term<C>& lr = rest.terms().front();
    if (!lg.monomial.divides(lr.monomial)) {
      throw Error(ErrorKind::NonDivisible, "leading term not divisible; division is not exact");
    }
    Term<C> q{lr.coeff / lg.coeff, lr.monomial / lg.monomial};
    rest -= g.shifted(q.monomial).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial<C>(f.table(), f.unit(), std::move(quotient));
}

// Rational-specific operations (poly.cpp).

/// Common (pi, pibar) bidegree of all terms. Throws NotBihomogeneousError
/// listing the terms that disagree with the leading term's bidegree, or
/// InvalidArgument when the table has no weights.
Bidegree bidegree(const QPoly& f);

/// Weighted change of variables from a spin-style alphabet to a reduced one.
/// Source variables listed in `dropped` are divided out; every other source
/// variable maps to the named target variable.
struct Dehomogenization {
  TablePtr source;
  TablePtr target;
  std::vector<std::optional<std::size_t>> image;  // per source variable
};

/// a->x1, ac->xc1, b->x2, bc->xc2, Phi11->phi11; p and pc dropped.
/// `source` must contain exactly the spin alphabet, possibly plus extra
/// self-paired weight-(0,0) variables which are carried over by name.
Dehomogenization standard_dehomogenization(const TablePtr& source);

QPoly dehomogenize(const QPoly& f, const Dehomogenization& scheme);
/// Uses standard_dehomogenization(f.table()).
QPoly dehomogenize(const QPoly& f);

/// Substitutes rational values for some variables; result stays on f's table.
QPoly specialize(const QPoly& f, const std::map<std::string, Rational>& bindings);

/// Image of f in Z_p. Throws BadReduction.
FpPoly reduce_mod(const QPoly& f, Prime p);

/// Value of the mod-p image of f at `point`. Throws BadReduction.
FpElement eval_fp(const QPoly& f, const std::vector<FpElement>& point, Prime p);
FpElement eval_fp(const FpPoly& f, const std::vector<FpElement>& point);

/// Moves f onto `target` by variable name. Variables of f that occur with a
/// nonzero exponent must exist in `target` (UnknownVariable otherwise).
QPoly rebind(const QPoly& f, const TablePtr& target);

/// Clears denominators and removes integer content; the canonical leading
/// coefficient becomes positive. Zero stays zero.
QPoly primitive_part(const QPoly& f);

}  // namespace idealkit
