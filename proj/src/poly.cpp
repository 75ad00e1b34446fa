#include <set>

#include "idealkit/parse.hpp"
#include "idealkit/polynomial.hpp"

namespace idealkit {

namespace {

Bidegree term_bidegree(const Monomial& m, const std::vector<Bidegree>& w) {
  Bidegree d;
  for (std::size_t i = 0; i < m.size(); ++i) {
    d.pi += w[i].pi * static_cast<int>(m[i]);
    d.pibar += w[i].pibar * static_cast<int>(m[i]);
  }
  return d;
}

std::uint64_t pow_mod(std::uint64_t base, unsigned e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1u) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Bidegree bidegree(const QPoly& f) {
  const auto& w = f.table()->weights();
  if (f.is_zero()) return {};
  const Bidegree ref = term_bidegree(f.terms().front().monomial, w);
  std::vector<std::string> offending;
  for (const auto& t : f.terms()) {
    const Bidegree d = term_bidegree(t.monomial, w);
    if (!(d == ref)) {
      offending.push_back(format_term(t, *f.table()) + " has bidegree (" +
                          std::to_string(d.pi) + "," + std::to_string(d.pibar) +
                          "), leading term has (" + std::to_string(ref.pi) + "," +
                          std::to_string(ref.pibar) + ")");
    }
  }
  if (!offending.empty()) throw NotBihomogeneousError(std::move(offending));
  return ref;
}

Dehomogenization standard_dehomogenization(const TablePtr& source) {
  static const std::map<std::string, std::string> kImage = {
      {"a", "x1"}, {"ac", "xc1"}, {"b", "x2"}, {"bc", "xc2"}, {"Phi11", "phi11"}};
  static const std::set<std::string> kDropped = {"p", "pc"};

  std::vector<std::string> extras;
  for (const auto& n : source->names()) {
    if (!kImage.count(n) && !kDropped.count(n)) extras.push_back(n);
  }
  for (const auto& [from, to] : kImage) {
    (void)to;
    if (!source->index_of(from)) {
      throw Error(ErrorKind::UnknownVariable,
                  "dehomogenization source lacks spin variable '" + from + "'");
    }
  }

  TablePtr target;
  if (extras.empty()) {
    target = reduced_table();
  } else {
    const auto base = reduced_table();
    std::vector<std::string> names = base->names();
    std::vector<std::size_t> conj = base->conj_pairs();
    for (const auto& e : extras) {
      names.push_back(e);
      conj.push_back(0);  // partner resolved below, once every name is in place
    }
    for (std::size_t k = 0; k < extras.size(); ++k) {
      const std::string partner = source->name(source->conj(*source->index_of(extras[k])));
      auto it = std::find(names.begin(), names.end(), partner);
      if (it == names.end()) {
        throw Error(ErrorKind::InvalidArgument,
                    "extra variable '" + extras[k] + "' is paired with a dropped variable");
      }
      conj[base->size() + k] = static_cast<std::size_t>(it - names.begin());
    }
    target = make_table(VariableTable(std::move(names), std::move(conj)));
  }

  Dehomogenization scheme{source, target, {}};
  for (const auto& n : source->names()) {
    if (kDropped.count(n)) {
      scheme.image.push_back(std::nullopt);
    } else {
      auto it = kImage.find(n);
      scheme.image.push_back(target->require(it == kImage.end() ? n : it->second));
    }
  }
  return scheme;
}

QPoly dehomogenize(const QPoly& f, const Dehomogenization& scheme) {
  if (!same_table(f.table(), scheme.source)) {
    throw Error(ErrorKind::TableMismatch, "polynomial is not on the dehomogenization source table");
  }
  (void)bidegree(f);
  std::vector<Term<Rational>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(scheme.target->size());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (scheme.image[i]) m.set(*scheme.image[i], m[*scheme.image[i]] + t.monomial[i]);
    }
    out.push_back({t.coeff, m});
  }
  return QPoly(scheme.target, Rational(1), std::move(out));
}

QPoly dehomogenize(const QPoly& f) {
  return dehomogenize(f, standard_dehomogenization(f.table()));
}

QPoly specialize(const QPoly& f, const std::map<std::string, Rational>& bindings) {
  if (bindings.empty()) return f;
  std::vector<std::pair<std::size_t, Rational>> bound;
  for (const auto& [name, value] : bindings) bound.emplace_back(f.table()->require(name), value);
  std::vector<Term<Rational>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Term<Rational> s = t;
    for (const auto& [i, value] : bound) {
      const unsigned e = s.monomial[i];
      if (e == 0) continue;
      mpq_class power;
      mpz_pow_ui(power.get_num_mpz_t(), value.numerator().get_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), value.denominator().get_mpz_t(), e);
      s.coeff *= Rational(power);
      s.monomial.set(i, 0);
    }
    if (!s.coeff.is_zero()) out.push_back(std::move(s));
  }
  return QPoly(f.table(), Rational(1), std::move(out));
}

FpPoly reduce_mod(const QPoly& f, Prime p) {
  std::vector<Term<FpElement>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({reduce_mod_p(t.coeff, p), t.monomial});
  return FpPoly(f.table(), FpElement::one(p), std::move(out));
}

FpElement eval_fp(const FpPoly& f, const std::vector<FpElement>& point) {
  const std::uint64_t p = f.unit().modulus();
  if (point.size() != f.table()->size()) {
    throw Error(ErrorKind::InvalidArgument, "evaluation point has the wrong dimension");
  }
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coeff.value();
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      if (t.monomial[i] != 0) v = v * pow_mod(point[i].value(), t.monomial[i], p) % p;
    }
    acc = (acc + v) % p;
  }
  return FpElement(static_cast<std::int64_t>(acc), f.unit().prime());
}

FpElement eval_fp(const QPoly& f, const std::vector<FpElement>& point, Prime p) {
  for (const auto& x : point) {
    if (x.modulus() != p.value()) {
      throw Error(ErrorKind::InvalidArgument, "evaluation point lives in a different field");
    }
  }
  return eval_fp(reduce_mod(f, p), point);
}

QPoly rebind(const QPoly& f, const TablePtr& target) {
  if (same_table(f.table(), target)) return QPoly(target, Rational(1), f.terms());
  const auto& src = *f.table();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src.name(i));
  std::vector<Term<Rational>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i]) {
        throw Error(ErrorKind::UnknownVariable,
                    "variable '" + src.name(i) + "' does not exist on the target table");
      }
      m.set(*map[i], t.monomial[i]);
    }
    out.push_back({t.coeff, m});
  }
  return QPoly(target, Rational(1), std::move(out));
}

QPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return f;
  mpz_class den = 1, num = 0;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.denominator().get_mpz_t());
  for (const auto& t : f.terms()) {
    mpz_class v = t.coeff.numerator() * (den / t.coeff.denominator());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  if (f.terms().front().coeff.sign() < 0) num = -num;
  return f.scaled(Rational(den, num));
}

}  // namespace idealkit
