#include "support.hpp"

#include "idealkit/groebner.hpp"

using namespace idealkit;
using idealkit::test::P;

namespace {

// p2 as recovered from the N1 factorization on the spin alphabet, carried to
// the component table.
QPoly derived_p2(const TablePtr& target) {
  const auto& spin = test::load("side_relations/spin_relations.sys");
  const QPoly n1 = specialize(spin.entry("N1").poly(), {{"Phi11", Rational(0)}});
  const QPoly head = parse_poly("-48*bc^3", spin.table) * spin.entry("p1").poly();
  return rebind(dehomogenize(exact_divide(n1, head)), target);
}

}  // namespace

TEST_CASE("normal forms") {
  const auto t = test::xy();
  const auto lex = TermOrder::lex(2);
  CHECK(normal_form(P("x^2", t), {P("x", t)}, lex).is_zero());
  CHECK(normal_form(P("x^2 + y", t), {P("y - 1", t)}, lex) == P("x^2 + 1", t));
  CHECK(normal_form(P("x*y + 1", t), {zero_poly(t), P("x", t)}, lex) == P("1", t));
}

TEST_CASE("p2 vanishes on the first component") {
  const auto& comp = test::load("phi11_zero/p2_components.sys");
  const auto ord = TermOrder::grevlex(comp.table->size());
  const QBasis G1 = buchberger(comp.entry("G1").polys, ord);
  CHECK(normal_form(derived_p2(comp.table), G1.generators, ord).is_zero());
}

TEST_CASE("S-polynomials") {
  const auto t = test::xy();
  const auto lex = TermOrder::lex(2);
  CHECK(s_polynomial(P("x + y", t), P("x - y", t), lex) == P("2*y", t));
  const QPoly f = P("x^2*y - 3", t);
  CHECK(s_polynomial(f, f, lex).is_zero());
  const QPoly s = s_polynomial(P("x^2", t), P("y^2", t), lex);
  CHECK(normal_form(s, {P("x^2", t), P("y^2", t)}, lex).is_zero());
  CHECK_THROWS_AS(s_polynomial(zero_poly(t), f, lex), Error);
}

TEST_CASE("small bases") {
  const auto t = test::xy();
  const QBasis G = buchberger({P("x + y", t), P("x - y", t)}, TermOrder::lex(2));
  CHECK(G.generators == std::vector<QPoly>{P("x", t), P("y", t)});
  CHECK(is_reduced_groebner(G));

  const QBasis H = buchberger({P("x^2 - y", t), P("x*y - 1", t)}, TermOrder::lex(2));
  CHECK(H.generators == std::vector<QPoly>{P("x - y^2", t), P("y^3 - 1", t)});

  const QBasis G1 = buchberger({P("1", t)}, TermOrder::grevlex(2));
  CHECK(is_trivial(G1));
  CHECK_FALSE(is_trivial(buchberger({P("x", t)}, TermOrder::grevlex(2))));
  CHECK(buchberger({zero_poly(t)}, TermOrder::lex(2)).generators.empty());
}

TEST_CASE("resource caps") {
  const auto& fin = test::load("final_system.sys");
  GroebnerOptions tight;
  tight.max_pair_reductions = 3;
  try {
    buchberger(test::with_conjugates(fin.all_polys()), TermOrder::grevlex(fin.table->size()), tight);
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("final system is inconsistent") {
  const auto& fin = test::load("final_system.sys");
  const auto F = test::with_conjugates(
      {fin.entry("f1").poly(), fin.entry("f3").poly(), fin.entry("f4").poly(), fin.entry("S1").poly()});
  for (auto kind : {OrderKind::GrevLex, OrderKind::GrLex}) {
    const QBasis G = buchberger(F, make_order(kind, *fin.table));
    CHECK(is_trivial(G));
    CHECK(G.generators.front() == constant_poly(fin.table, Rational(1)));
  }
}

TEST_CASE("stored reduced S1 is the image of the spin S1 numerator") {
  const auto& fin = test::load("final_system.sys");
  const QPoly s1 = dehomogenize(test::entry("side_relations/spin_relations.sys", "S1_num"));
  CHECK(rebind(s1, fin.table) == fin.entry("S1").poly());
}

TEST_CASE("d1 branch is inconsistent") {
  const auto& d = test::load("d1_branch.sys");
  const QPoly d1 = d.entry("d1").poly(), e1 = d.entry("E1").poly();
  const std::vector<QPoly> F = {d1, conjugate(d1), e1, conjugate(e1), d.entry("E2").poly(),
                                d.entry("E3").poly()};
  for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    CHECK(is_trivial(buchberger(F, make_order(kind, *d.table))));
  }
}

TEST_CASE("p1 branch basis") {
  const auto& s = test::load("phi11_zero/p1_branch.sys");
  const auto F = test::with_conjugates({s.entry("p1").poly(), s.entry("p3").poly()});
  const QBasis G = buchberger(F, TermOrder::grevlex(s.table->size()));
  // The system alone is consistent; only the excluded loci make it empty.
  CHECK_FALSE(is_trivial(G));
  CHECK(is_reduced_groebner(G));
  for (const auto& f : F) CHECK(normal_form(f, G.generators, G.order).is_zero());
}

TEST_CASE("radical membership") {
  const auto t = test::xy();
  CHECK(radical_member(P("x", t), {P("x^2", t)}));
  CHECK_FALSE(radical_member(P("y", t), {P("x", t)}));
  CHECK(radical_member(P("x*y", t), {P("x^3", t), P("y - 1", t)}));

  const auto& comp = test::load("phi11_zero/p2_components.sys");
  CHECK(radical_member(derived_p2(comp.table), comp.entry("G2").polys));
}

TEST_CASE("fresh variable names") {
  const TablePtr t = make_table(std::vector<std::string>{"z", "z_"});
  const TablePtr e = extend_table(t, "z");
  CHECK(e->size() == 3);
  CHECK(e->name(2) == "z__");
  CHECK(e->conj(2) == 2);
}

TEST_CASE("prime-field engine") {
  const auto t = test::xy();
  const Prime p(7);
  const FpBasis G = buchberger({reduce_mod(P("x + y", t), p), reduce_mod(P("x - y", t), p)},
                               TermOrder::lex(2));
  REQUIRE(G.generators.size() == 2);
  CHECK(print_poly(G.generators[0]) == "x");
  CHECK(print_poly(G.generators[1]) == "y");
  CHECK(is_reduced_groebner(G));
}
