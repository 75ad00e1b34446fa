#include "support.hpp"

#include <fstream>

using namespace idealkit;
using idealkit::test::P;

namespace {

const TablePtr& reduced() {
  static const TablePtr t = reduced_table();
  return t;
}

}  // namespace

TEST_CASE("parsing single polynomials") {
  const TablePtr r = reduced();
  const QPoly g = P("66*x1 + 125", r);
  CHECK(g.size() == 2);
  CHECK(g.coefficient(Monomial{1, 0, 0, 0, 0}) == Rational(66));
  CHECK(P("9108*x2*xc2 + 247", r).size() == 2);
  CHECK(P("-x1^2 + 3/4*xc1 - 7", r).coefficient(Monomial{0, 1, 0, 0, 0}) == Rational(3, 4));
  CHECK(P("x1*x1", r) == P("x1^2", r));
  CHECK(P("2*x1 - 2*x1", r).is_zero());
  CHECK(P("  x1\n  + x2 ", r) == P("x1 + x2", r));
}

TEST_CASE("syntax errors carry positions") {
  const TablePtr r = reduced();
  try {
    parse_poly("x1 + + 3", r, {"f.sys", 4, 3});
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.source() == "f.sys");
    CHECK(e.line() == 4);
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()).find("f.sys:4:8") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly("", r), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x1^", r), SyntaxError);
  CHECK_THROWS_AS(parse_poly("2 x1", r), SyntaxError);
}

TEST_CASE("unknown variables and zero denominators") {
  const TablePtr r = reduced();
  try {
    parse_poly("x1 + y", r);
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
  try {
    parse_poly("1/0*x1", r);
    FAIL("expected ZeroDenominator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDenominator);
  }
}

TEST_CASE("canonical printing") {
  const TablePtr r = reduced();
  CHECK(print_poly(P("22 + 12*x1 - xc2", r)) == "12*x1 - xc2 + 22");
  CHECK(print_poly(zero_poly(r)) == "0");
  CHECK(print_poly(P("-1", r)) == "-1");
  CHECK(print_poly(P("1/2*x1^2*xc1 - x2", r)) == "1/2*x1^2*xc1 - x2");
  CHECK(print_poly(reduce_mod(P("x1 - 1", r), Prime(7))) == "x1 + 6");
}

TEST_CASE("every fixture round-trips") {
  for (const auto& rel : test::fixture_files()) {
    CAPTURE(rel);
    const SystemFile& s = test::load(rel);
    const SystemFile again = parse_system(print_system(s), s.source);
    CHECK(print_system(again) == print_system(s));
    REQUIRE(again.entries.size() == s.entries.size());
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      CHECK(again.entries[i].name == s.entries[i].name);
      CHECK(again.entries[i].citation == s.entries[i].citation);
      CHECK(again.entries[i].suspect == s.entries[i].suspect);
      CHECK(again.entries[i].polys == s.entries[i].polys);
    }
    for (const auto& f : s.all_polys()) CHECK(parse_poly(print_poly(f), s.table) == f);
  }
}

TEST_CASE("component file layout") {
  const SystemFile& s = test::load("phi11_zero/p2_components.sys");
  std::vector<std::string> names;
  for (const auto& e : s.entries) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"p2", "N2", "G1", "G2", "G3", "G4", "G5", "G6"});
  CHECK(s.entry("G1").polys.size() == 3);
  CHECK(s.entry("N2").is_suspect());
  CHECK_FALSE(s.entry("G6").is_suspect());
  CHECK(s.find("G7") == nullptr);
  try {
    s.entry("G7");
    FAIL("expected FixtureMissing");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FixtureMissing);
  }
}

TEST_CASE("system file errors") {
  try {
    parse_system("", "empty.sys");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(std::find(e.expected().begin(), e.expected().end(), "@vars") != e.expected().end());
  }
  const std::string twice =
      "@vars x y\n"
      "entry p1 \"first\"\n  x\n;\n"
      "entry p1 \"second\"\n  y\n;\n";
  try {
    parse_system(twice, "twice.sys");
    FAIL("expected DuplicateName");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateName);
    CHECK(std::string(e.what()).find("twice.sys:5") != std::string::npos);
  }
  try {
    load_system("/nonexistent/missing.sys");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
  try {
    parse_system("@vars x y\nentry f \"c\"\n  x + q\n;\n", "bad.sys");
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
    CHECK(std::string(e.what()).find("bad.sys:3") != std::string::npos);
  }
}

TEST_CASE("header directives") {
  const std::string text =
      "# comment\n"
      "@vars u v w\n"
      "@conj u v\n"
      "@order lex w u\n"
      "entry f \"c\" suspect \"why\"\n  u*v, w - 1\n;\n";
  const SystemFile s = parse_system(text, "h.sys");
  CHECK(s.table->conj(0) == 1);
  CHECK(s.table->conj(2) == 2);
  REQUIRE(s.order.has_value());
  CHECK(s.order->kind() == OrderKind::Lex);
  CHECK(s.order->priority() == std::vector<std::size_t>{2, 0, 1});
  CHECK(s.entry("f").polys.size() == 2);
  CHECK(*s.entry("f").suspect == "why");
  CHECK(describe_order(*s.order, *s.table).find("lex") == 0);
}

TEST_CASE("order names") {
  CHECK(parse_order_kind("lex") == OrderKind::Lex);
  CHECK(parse_order_kind("grlex") == OrderKind::GrLex);
  CHECK(parse_order_kind("grevlex") == OrderKind::GrevLex);
  CHECK_THROWS_AS(parse_order_kind("deglex"), Error);
  const auto t = test::xy();
  CHECK(make_order(OrderKind::Lex, *t, {"y"}).priority() == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(make_order(OrderKind::Lex, *t, {"q"}), Error);
}
