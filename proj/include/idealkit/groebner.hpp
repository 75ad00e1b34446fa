#pragma once

#include <cstddef>
#include <vector>

#include "idealkit/polynomial.hpp"

namespace idealkit {

struct GroebnerOptions {
  std::size_t max_pair_reductions = 1'000'000;
  std::size_t max_terms = 100'000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t max_terms = 0;
};

/// Reduced Groebner basis: generators monic under `order`, inter-reduced and
/// sorted by leading monomial, largest first.
template <class C>
struct GroebnerBasis {
  TablePtr table;
  TermOrder order;
  std::vector<Polynomial<C>> generators;
  GroebnerStats stats;

  std::vector<Monomial> leading_monomials() const;
};

using QBasis = GroebnerBasis<Rational>;
using FpBasis = GroebnerBasis<FpElement>;

/// Full multivariate division remainder. The reducer for a term is the first
/// element of G, in list order, whose leading term divides it; the largest
/// reducible term is always reduced first. Zero elements of G are ignored.
template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& G,
                          const TermOrder& ord);

/// lcm(LT f, LT g)/LT(f) * f - lcm/LT(g) * g with field coefficients.
/// Throws ZeroPolynomial.
template <class C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g, const TermOrder& ord);

/// Buchberger with the normal selection strategy and the product and chain
/// criteria. Over Q the loop runs fraction-free on integer coefficients.
/// Throws ResourceLimit when a cap in `options` is crossed.
template <class C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& F, const TermOrder& ord,
                            const GroebnerOptions& options = {});

// Non-template entry points so that braced lists of polynomials deduce.
inline QBasis buchberger(const std::vector<QPoly>& F, const TermOrder& ord,
                         const GroebnerOptions& options = {}) {
  return buchberger<Rational>(F, ord, options);
}
inline FpBasis buchberger(const std::vector<FpPoly>& F, const TermOrder& ord,
                          const GroebnerOptions& options = {}) {
  return buchberger<FpElement>(F, ord, options);
}

template <class C>
bool is_trivial(const GroebnerBasis<C>& G) {
  return G.generators.size() == 1 && G.generators.front().is_constant() &&
         !G.generators.front().is_zero();
}

/// Definitional check: every S-polynomial of the basis reduces to zero and
/// no leading monomial divides another.
template <class C>
bool is_reduced_groebner(const GroebnerBasis<C>& G);

/// f vanishes on V(F): adjoins a fresh variable z and tests whether
/// F + <1 - z*f> is the unit ideal. The default order is grevlex with z least
/// significant.
bool radical_member(const QPoly& f, const std::vector<QPoly>& F,
                    const GroebnerOptions& options = {});
bool radical_member(const QPoly& f, const std::vector<QPoly>& F, const TermOrder& ord,
                    const GroebnerOptions& options = {});

/// Table with one fresh self-paired variable appended (renamed if `name` is
/// taken).
TablePtr extend_table(const TablePtr& table, const std::string& name);

extern template struct GroebnerBasis<Rational>;
extern template struct GroebnerBasis<FpElement>;

}  // namespace idealkit
