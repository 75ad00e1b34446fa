#include "support.hpp"

#include "idealkit/analyze.hpp"

using namespace idealkit;
using idealkit::test::P;

TEST_CASE("leading terms of a basis") {
  const auto t = test::xy();
  const QBasis G = buchberger({P("x", t), P("y", t)}, TermOrder::grevlex(2));
  const LeadingTermSet H = leading_terms(G);
  CHECK(H.monomials == std::vector<Monomial>{Monomial{1, 0}, Monomial{0, 1}});
  CHECK(H.source == "basis");
  CHECK(H.order.has_value());

  const LeadingTermSet one = leading_terms(buchberger({P("3", t)}, TermOrder::lex(2)));
  CHECK(one.is_unit());
}

TEST_CASE("declared leading terms") {
  const auto& fin = test::load("finiteness.sys");
  const LeadingTermSet H = leading_terms_from_fixture(fin.entry("H").polys, "H");
  CHECK(H.monomials.size() == 6);
  CHECK_FALSE(H.order.has_value());
  std::vector<std::string> printed;
  for (const auto& m : H.monomials) printed.push_back(format_monomial(m, *fin.table));
  CHECK(printed == std::vector<std::string>{"x1^6", "x2^5", "xc1^5", "xc2^5", "phi11^4", "z^5"});
}

TEST_CASE("zero-dimensionality") {
  const auto& fin = test::load("finiteness.sys");
  const LeadingTermSet H = leading_terms_from_fixture(fin.entry("H").polys, "H");
  CHECK(is_zero_dimensional(H, *fin.table));

  const auto t = test::xy();
  CHECK_FALSE(is_zero_dimensional(leading_terms_from_fixture({P("x*y", t)}, "xy"), *t));
  CHECK(is_zero_dimensional(leading_terms_from_fixture({P("x^2", t), P("y^3", t)}, "pp"), *t));
  CHECK_FALSE(is_zero_dimensional(leading_terms_from_fixture({P("x^2", t)}, "x"), *t));
  CHECK(is_zero_dimensional(leading_terms_from_fixture({P("1", t)}, "unit"), *t));
}

TEST_CASE("standard monomials") {
  const auto t = test::xy();
  auto count = [&](std::vector<QPoly> polys) {
    return standard_monomials(leading_terms_from_fixture(polys, "h"), *t);
  };
  CHECK(count({P("x^2", t), P("y^2", t)}).count == 4);
  CHECK(count({P("x*y", t)}).infinite);
  CHECK(count({P("x^2", t), P("y^3", t), P("x*y", t)}).count == 4);
  CHECK(count({P("1", t)}).count == 0);

  const auto& fin = test::load("finiteness.sys");
  const auto H = leading_terms_from_fixture(fin.entry("H").polys, "H");
  const auto c = standard_monomials(H, *fin.table);
  CHECK_FALSE(c.infinite);
  CHECK(c.count == 6 * 5 * 5 * 5 * 4 * 5);
  try {
    standard_monomials(H, *fin.table, 100);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("verdict does not depend on the order for small systems") {
  const auto t = make_table(std::vector<std::string>{"x", "y", "z"});
  const std::vector<QPoly> F = {P("x^2 + y*z - 1", t), P("y^2 - x + z", t), P("z^2 - x*y", t)};
  std::vector<bool> verdicts;
  for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    verdicts.push_back(is_zero_dimensional(leading_terms(buchberger(F, make_order(kind, *t))), *t));
  }
  CHECK(verdicts == std::vector<bool>{true, true, true});
  const std::vector<QPoly> curve = {P("x^2 + y^2 - z", t)};
  for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    CHECK_FALSE(is_zero_dimensional(leading_terms(buchberger(curve, make_order(kind, *t))), *t));
  }
}
