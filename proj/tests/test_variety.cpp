#include "support.hpp"

#include "idealkit/variety.hpp"

using namespace idealkit;
using idealkit::test::P;

namespace {

TablePtr x_only() {
  static const TablePtr t = make_table(std::vector<std::string>{"x"});
  return t;
}

}  // namespace

TEST_CASE("enumeration over small fields") {
  const auto t = x_only();
  CHECK(brute_force({P("x^2 - 1", t)}, Prime(5)).points == std::vector<FpPoint>{{1}, {4}});
  CHECK(brute_force({P("x^2 + 1", t)}, Prime(3)).points.empty());
  CHECK(brute_force({P("0", t)}, Prime(3)).points.size() == 3);
  const auto xy = test::xy();
  CHECK(brute_force({P("x - y", xy), P("x*y - 1", xy)}, Prime(7)).points ==
        std::vector<FpPoint>{{1, 1}, {6, 6}});
}

TEST_CASE("enumeration caps and bad reduction") {
  const auto xy = test::xy();
  VarietyOptions small;
  small.max_evaluations = 100;
  try {
    brute_force({P("x - y", xy)}, Prime(11), small);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  try {
    brute_force({P("1/5*x - y", xy)}, Prime(5));
    FAIL("expected BadReduction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadReduction);
  }
}

TEST_CASE("threaded enumeration matches the serial one") {
  const auto& s = test::load("phi11_zero/p1_branch.sys");
  const auto F = test::with_conjugates({s.entry("p1").poly(), s.entry("p3").poly()});
  VarietyOptions par;
  par.threads = 4;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    CHECK(brute_force(F, Prime(p)).points == brute_force(F, Prime(p), par).points);
  }
}

TEST_CASE("p1 branch points mod small primes lie on the excluded locus") {
  const auto& s = test::load("phi11_zero/p1_branch.sys");
  const auto F = test::with_conjugates({s.entry("p1").poly(), s.entry("p3").poly()});
  const QPoly d1 = rebind(test::entry("d1_branch.sys", "d1"), s.table);
  const QPoly h = P("x1*xc1*x2*xc2", s.table) * d1 * conjugate(d1);
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const Prime q(p);
    const FpVariety V = brute_force(F, q);
    CAPTURE(p);
    CHECK_FALSE(V.points.empty());
    for (const auto& pt : V.points) {
      std::vector<FpElement> e;
      for (auto v : pt) e.emplace_back(v, q);
      CHECK(eval_fp(h, e, q).is_zero());
    }
  }
}

TEST_CASE("coverage") {
  const auto t = x_only();
  const auto r = variety_covered({P("x^2 - 1", t)}, {{P("x - 1", t)}, {P("x + 1", t)}}, Prime(7));
  CHECK(r.covered);
  CHECK(r.sound);
  CHECK(r.symmetric_difference.empty());

  const auto none = variety_covered({P("x^2 - 1", t)}, {}, Prime(7));
  CHECK_FALSE(none.covered);
  CHECK(none.sound);
  CHECK(none.uncovered == std::vector<FpPoint>{{1}, {6}});

  const auto extra = variety_covered({P("x - 1", t)}, {{P("x - 1", t)}, {P("x - 2", t)}}, Prime(7));
  CHECK(extra.covered);
  CHECK_FALSE(extra.sound);
  CHECK(extra.unsound == std::vector<FpPoint>{{2}});
}
