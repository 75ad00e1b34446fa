#include "idealkit/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace idealkit {

namespace engine {

template <class W>
struct WTerm {
  W c;
  Monomial m;
};

template <class W>
using WPoly = std::vector<WTerm<W>>;

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) mask |= 1u << i;
  }
  return mask;
}

template <class W>
void sort_under(WPoly<W>& p, const TermOrder& ord) {
  std::sort(p.begin(), p.end(),
            [&](const WTerm<W>& x, const WTerm<W>& y) { return ord.greater(x.m, y.m); });
}

// Coefficient policies. Both expose the same static interface so that the
// reduction loop is written once.

// Exact field arithmetic; polynomials are kept monic.
template <class C>
struct FieldArith {
  using W = C;

  static WPoly<W> load(const Polynomial<C>& f, const TermOrder& ord) {
    WPoly<W> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back({t.coeff, t.monomial});
    sort_under(out, ord);
    return out;
  }

  static void normalize(WPoly<W>& p) {
    if (p.empty() || p.front().c.is_one()) return;
    const W inv = (p.front().c / p.front().c) / p.front().c;
    for (auto& t : p) t.c *= inv;
  }

  // Multipliers (a, b) such that a*ct - b*lg = 0.
  static bool cancel(const W& ct, const W& lg, W& a, W& b) {
    b = ct / lg;
    (void)a;
    return true;  // a is one
  }

  static void periodic_content(WPoly<W>&, std::size_t, WPoly<W>&) {}

  static Polynomial<C> store(const WPoly<W>& p, const TablePtr& table, const C& unit) {
    std::vector<Term<C>> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back({t.c, t.m});
    return Polynomial<C>(table, unit, std::move(terms));
  }
};

// Fraction-free arithmetic over Z for rational input: every polynomial is a
// primitive integer polynomial with a positive leading coefficient.
struct IntegerArith {
  using W = mpz_class;

  static WPoly<W> load(const QPoly& f, const TermOrder& ord) {
    mpz_class den = 1;
    for (const auto& t : f.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    }
    WPoly<W> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      out.push_back({t.coeff.numerator() * (den / t.coeff.denominator()), t.monomial});
    }
    sort_under(out, ord);
    return out;
  }

  static mpz_class content(const WPoly<W>& p, std::size_t from = 0) {
    mpz_class g = 0;
    for (std::size_t i = from; i < p.size(); ++i) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[i].c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  static void divide_all(WPoly<W>& p, std::size_t from, const mpz_class& g) {
    for (std::size_t i = from; i < p.size(); ++i) {
      mpz_divexact(p[i].c.get_mpz_t(), p[i].c.get_mpz_t(), g.get_mpz_t());
    }
  }

  static void normalize(WPoly<W>& p) {
    if (p.empty()) return;
    mpz_class g = content(p);
    if (p.front().c < 0) g = -g;
    if (g != 1) divide_all(p, 0, g);
  }

  static bool cancel(const W& ct, const W& lg, W& a, W& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ct.get_mpz_t(), lg.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), lg.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), ct.get_mpz_t(), g.get_mpz_t());
    if (a < 0) {
      a = -a;
      b = -b;
    }
    return a == 1;
  }

  // Divides the pending part p[pos..] and the finished remainder r by their
  // joint content.
  static void periodic_content(WPoly<W>& p, std::size_t pos, WPoly<W>& r) {
    mpz_class g = content(p, pos);
    if (g == 1) return;
    for (const auto& t : r) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) return;
    }
    if (g == 0) return;
    divide_all(p, pos, g);
    divide_all(r, 0, g);
  }

  static QPoly store(const WPoly<W>& p, const TablePtr& table, const Rational& unit) {
    std::vector<Term<Rational>> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back({Rational(t.c), t.m});
    return QPoly(table, unit, std::move(terms));
  }
};

template <class C>
struct EngineArith {
  using type = FieldArith<C>;
};
template <>
struct EngineArith<Rational> {
  using type = IntegerArith;
};

// Working basis element: polynomial sorted under the active order plus its
// cached leading monomial and support mask.
template <class W>
struct Element {
  WPoly<W> poly;
  Monomial lm;
  std::uint32_t mask = 0;
  bool active = true;
};

template <class A>
class Reducer {
 public:
  using W = typename A::W;

  Reducer(const TermOrder& ord, const GroebnerOptions& options, GroebnerStats& stats)
      : ord_(ord), options_(options), stats_(stats) {}

  // a*p[p_from..] - b*(q*g[1..]) merged under the order. `a_one` skips the
  // scaling of p.
  WPoly<W> combine(const W& a, bool a_one, const WPoly<W>& p, std::size_t p_from, const W& b,
                   const Monomial& q, const WPoly<W>& g) const {
    WPoly<W> out;
    out.reserve(p.size() - p_from + g.size());
    std::size_t i = p_from, j = 1;
    while (i < p.size() || j < g.size()) {
      int c;
      Monomial gm;
      if (j < g.size()) gm = g[j].m * q;
      if (i == p.size()) c = -1;
      else if (j == g.size()) c = 1;
      else {
        auto o = ord_.compare(p[i].m, gm);
        c = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (c > 0) {
        out.push_back(p[i]);
        if (!a_one) out.back().c *= a;
        ++i;
      } else if (c < 0) {
        out.push_back({-(b * g[j].c), gm});
        ++j;
      } else {
        W v = a_one ? W(p[i].c) : W(a * p[i].c);
        v -= b * g[j].c;
        if (!is_zero(v)) out.push_back({std::move(v), gm});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction of p modulo the active elements of `basis`, taken in list
  // order. When `keep_head` is set the leading term is left alone (tail
  // reduction for inter-reducing a basis).
  WPoly<W> reduce(WPoly<W> p, const std::vector<Element<W>>& basis, bool keep_head,
                  const Element<W>* skip = nullptr) const {
    WPoly<W> r;
    std::size_t pos = 0;
    if (keep_head && !p.empty()) {
      r.push_back(p.front());
      pos = 1;
    }
    std::size_t steps = 0;
    while (pos < p.size()) {
      const auto& t = p[pos];
      const std::uint32_t tmask = support_mask(t.m);
      const Element<W>* div = nullptr;
      for (const auto& e : basis) {
        if (!e.active || &e == skip) continue;
        if ((e.mask & ~tmask) != 0) continue;
        if (e.lm.divides(t.m)) {
          div = &e;
          break;
        }
      }
      if (!div) {
        r.push_back(t);
        ++pos;
        continue;
      }
      W a = t.c, b = t.c;
      const bool a_one = A::cancel(t.c, div->poly.front().c, a, b);
      if (!a_one) {
        for (auto& s : r) s.c *= a;
      }
      p = combine(a, a_one, p, pos + 1, b, t.m / div->lm, div->poly);
      pos = 0;
      if (p.size() + r.size() > options_.max_terms) {
        throw Error(ErrorKind::ResourceLimit,
                    "intermediate polynomial exceeds " + std::to_string(options_.max_terms) +
                        " terms");
      }
      stats_.max_terms = std::max(stats_.max_terms, p.size() + r.size());
      if (++steps % 8 == 0) A::periodic_content(p, pos, r);
    }
    A::normalize(r);
    return r;
  }

  WPoly<W> spoly(const Element<W>& f, const Element<W>& g) const {
    const Monomial l = Monomial::lcm(f.lm, g.lm);
    W a = f.poly.front().c, b = a;
    const bool a_one = A::cancel(f.poly.front().c, g.poly.front().c, a, b);
    // a*(l/lm f)*f - b*(l/lm g)*g; the leading terms cancel.
    WPoly<W> left;
    left.reserve(f.poly.size());
    const Monomial qf = l / f.lm;
    for (std::size_t i = 0; i < f.poly.size(); ++i) left.push_back({f.poly[i].c, f.poly[i].m * qf});
    return combine(a, a_one, left, 1, b, l / g.lm, g.poly);
  }

 private:
  static bool is_zero(const W& v) {
    if constexpr (std::is_same_v<W, mpz_class>) return sgn(v) == 0;
    else return v.is_zero();
  }

  const TermOrder& ord_;
  const GroebnerOptions& options_;
  GroebnerStats& stats_;
};

template <class W>
Element<W> make_element(WPoly<W> p) {
  Element<W> e;
  e.lm = p.front().m;
  e.mask = support_mask(e.lm);
  e.poly = std::move(p);
  return e;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

template <class C>
void require_shared_table(const std::vector<Polynomial<C>>& F, const TablePtr& table) {
  for (const auto& f : F) {
    if (!same_table(f.table(), table)) {
      throw Error(ErrorKind::TableMismatch, "polynomials live on different variable tables");
    }
  }
}

template <class C>
void require_order_fits(const TermOrder& ord, const TablePtr& table) {
  if (ord.size() != table->size()) {
    throw Error(ErrorKind::InvalidArgument, "term order and variable table differ in size");
  }
}

template <class C>
C monic_scale(const Polynomial<C>& f, const TermOrder& ord) {
  return f.unit() / leading_term(f, ord).coeff;
}

}  // namespace engine

using namespace engine;

template <class C>
std::vector<Monomial> GroebnerBasis<C>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(leading_term(g, order).monomial);
  return out;
}

template struct GroebnerBasis<Rational>;
template struct GroebnerBasis<FpElement>;

template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& G,
                          const TermOrder& ord) {
  require_shared_table(G, f.table());
  require_order_fits<C>(ord, f.table());
  using A = FieldArith<C>;
  std::vector<Element<C>> basis;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    basis.push_back(make_element(A::load(g, ord)));
  }
  GroebnerStats scratch;
  const GroebnerOptions unlimited{SIZE_MAX, SIZE_MAX};
  Reducer<A> red(ord, unlimited, scratch);
  // The remainder is made monic by the reducer; undo that so f - NF(f) lies
  // in the ideal rather than a scalar multiple of it.
  WPoly<C> p = A::load(f, ord);
  WPoly<C> r;
  {
    std::size_t pos = 0;
    while (pos < p.size()) {
      const auto& t = p[pos];
      const Element<C>* div = nullptr;
      const std::uint32_t tmask = support_mask(t.m);
      for (const auto& e : basis) {
        if ((e.mask & ~tmask) == 0 && e.lm.divides(t.m)) {
          div = &e;
          break;
        }
      }
      if (!div) {
        r.push_back(t);
        ++pos;
        continue;
      }
      C a = t.c, b = t.c;
      A::cancel(t.c, div->poly.front().c, a, b);
      p = red.combine(a, true, p, pos + 1, b, t.m / div->lm, div->poly);
      pos = 0;
    }
  }
  return A::store(r, f.table(), f.unit());
}

template <class C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g, const TermOrder& ord) {
  if (f.is_zero() || g.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial, "S-polynomial of the zero polynomial");
  }
  if (!same_table(f.table(), g.table())) {
    throw Error(ErrorKind::TableMismatch, "polynomials live on different variable tables");
  }
  const Term<C> lf = leading_term(f, ord);
  const Term<C> lg = leading_term(g, ord);
  const Monomial l = Monomial::lcm(lf.monomial, lg.monomial);
  return f.shifted(l / lf.monomial).scaled(f.unit() / lf.coeff) -
         g.shifted(l / lg.monomial).scaled(g.unit() / lg.coeff);
}

template <class C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& F, const TermOrder& ord,
                            const GroebnerOptions& options) {
  if (F.empty()) throw Error(ErrorKind::InvalidArgument, "buchberger needs at least one polynomial");
  const TablePtr table = F.front().table();
  const C unit = F.front().unit();
  require_shared_table(F, table);
  require_order_fits<C>(ord, table);

  using A = typename EngineArith<C>::type;
  using W = typename A::W;

  GroebnerBasis<C> out{table, ord, {}, {}};
  GroebnerStats& stats = out.stats;
  Reducer<A> red(ord, options, stats);
  std::vector<Element<W>> basis;
  std::vector<Pair> pairs;
  bool unit_ideal = false;

  // Gebauer-Moeller installation of a new, fully reduced element h.
  auto install = [&](WPoly<W> hp) {
    basis.push_back(make_element(std::move(hp)));
    const std::size_t h = basis.size() - 1;
    const Monomial& lh = basis[h].lm;
    if (lh.is_one()) {
      unit_ideal = true;
      return;
    }

    std::vector<Pair> cand;
    for (std::size_t g = 0; g < h; ++g) {
      if (basis[g].active) cand.push_back({g, h, Monomial::lcm(basis[g].lm, lh)});
    }
    stats.pairs_created += cand.size();
    // Keep a new pair unless another new pair's lcm properly divides it;
    // among equal lcms keep the first (coprime pairs win ties so that they
    // can be dropped by the product criterion below).
    std::stable_sort(cand.begin(), cand.end(), [&](const Pair& x, const Pair& y) {
      const bool cx = basis[x.i].lm.coprime(lh), cy = basis[y.i].lm.coprime(lh);
      return cx && !cy;
    });
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      bool drop = false;
      for (std::size_t m = 0; m < cand.size() && !drop; ++m) {
        if (m == k) continue;
        if (cand[m].lcm.divides(cand[k].lcm)) {
          if (!(cand[m].lcm == cand[k].lcm)) drop = true;
          else if (m < k) drop = true;
        }
      }
      if (drop) ++stats.chain_criterion;
      else kept.push_back(cand[k]);
    }
    // Product criterion: coprime leading monomials reduce to zero.
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (basis[p.i].lm.coprime(lh)) ++stats.product_criterion;
      else fresh.push_back(std::move(p));
    }
    // Chain criterion on old pairs.
    std::vector<Pair> survivors;
    survivors.reserve(pairs.size());
    for (auto& p : pairs) {
      if (lh.divides(p.lcm) && !(Monomial::lcm(basis[p.i].lm, lh) == p.lcm) &&
          !(Monomial::lcm(basis[p.j].lm, lh) == p.lcm)) {
        ++stats.chain_criterion;
      } else {
        survivors.push_back(std::move(p));
      }
    }
    pairs = std::move(survivors);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    for (std::size_t g = 0; g < h; ++g) {
      if (basis[g].active && lh.divides(basis[g].lm)) basis[g].active = false;
    }
  };

  for (const auto& f : F) {
    if (f.is_zero()) continue;
    WPoly<W> h = red.reduce(A::load(f, ord), basis, false);
    if (h.empty()) continue;
    install(std::move(h));
    if (unit_ideal) break;
  }

  while (!unit_ideal && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto c = ord.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                               (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i)))) {
        best = k;
      }
    }
    const Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (++stats.pairs_reduced > options.max_pair_reductions) {
      throw Error(ErrorKind::ResourceLimit,
                  "more than " + std::to_string(options.max_pair_reductions) + " pair reductions");
    }
    WPoly<W> s = red.spoly(basis[pr.i], basis[pr.j]);
    WPoly<W> h = s.empty() ? s : red.reduce(std::move(s), basis, false);
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    install(std::move(h));
  }

  if (unit_ideal) {
    out.generators.push_back(Polynomial<C>::constant(table, unit, unit));
    return out;
  }

  // Inter-reduce the minimal basis and make it monic under the order.
  std::vector<Element<W>> minimal;
  for (auto& e : basis) {
    if (e.active) minimal.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    minimal[k].poly = red.reduce(std::move(minimal[k].poly), minimal, true, &minimal[k]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Element<W>& x, const Element<W>& y) { return ord.greater(x.lm, y.lm); });
  for (const auto& e : minimal) {
    Polynomial<C> g = A::store(e.poly, table, unit);
    out.generators.push_back(g.scaled(monic_scale(g, ord)));
  }
  return out;
}

template <class C>
bool is_reduced_groebner(const GroebnerBasis<C>& G) {
  const auto lms = G.leading_monomials();
  for (std::size_t i = 0; i < lms.size(); ++i) {
    if (!leading_term(G.generators[i], G.order).coeff.is_one()) return false;
    for (std::size_t j = 0; j < lms.size(); ++j) {
      if (i != j && lms[i].divides(lms[j])) return false;
    }
    for (const auto& t : G.generators[i].terms()) {
      if (t.monomial == lms[i]) continue;
      for (std::size_t j = 0; j < lms.size(); ++j) {
        if (lms[j].divides(t.monomial)) return false;
      }
    }
  }
  for (std::size_t i = 0; i < G.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < G.generators.size(); ++j) {
      auto s = s_polynomial(G.generators[i], G.generators[j], G.order);
      if (!normal_form(s, G.generators, G.order).is_zero()) return false;
    }
  }
  return true;
}

TablePtr extend_table(const TablePtr& table, const std::string& name) {
  return make_table(table->extended(name));
}

bool radical_member(const QPoly& f, const std::vector<QPoly>& F, const TermOrder& ord,
                    const GroebnerOptions& options) {
  const TablePtr ext = extend_table(f.table(), "z");
  if (ord.size() != ext->size()) {
    throw Error(ErrorKind::InvalidArgument, "radical membership order must cover the fresh variable");
  }
  std::vector<QPoly> system;
  system.reserve(F.size() + 1);
  for (const auto& g : F) {
    if (!same_table(g.table(), f.table())) {
      throw Error(ErrorKind::TableMismatch, "polynomials live on different variable tables");
    }
    system.push_back(rebind(g, ext));
  }
  const QPoly z = variable_poly(ext, ext->size() - 1);
  system.push_back(constant_poly(ext, Rational(1)) - z * rebind(f, ext));
  return is_trivial(buchberger(system, ord, options));
}

bool radical_member(const QPoly& f, const std::vector<QPoly>& F, const GroebnerOptions& options) {
  return radical_member(f, F, TermOrder::grevlex(f.table()->size() + 1), options);
}

template QPoly normal_form(const QPoly&, const std::vector<QPoly>&, const TermOrder&);
template FpPoly normal_form(const FpPoly&, const std::vector<FpPoly>&, const TermOrder&);
template QPoly s_polynomial(const QPoly&, const QPoly&, const TermOrder&);
template FpPoly s_polynomial(const FpPoly&, const FpPoly&, const TermOrder&);
template QBasis buchberger(const std::vector<QPoly>&, const TermOrder&, const GroebnerOptions&);
template FpBasis buchberger(const std::vector<FpPoly>&, const TermOrder&, const GroebnerOptions&);
template bool is_reduced_groebner(const QBasis&);
template bool is_reduced_groebner(const FpBasis&);

}  // namespace idealkit
