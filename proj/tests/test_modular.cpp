#include "support.hpp"

#include "idealkit/modular.hpp"

using namespace idealkit;
using idealkit::test::P;

TEST_CASE("basis mod p") {
  const auto t = test::xy();
  const std::vector<QPoly> F = {P("x + y", t), P("x - y", t)};
  const FpBasis G7 = gb_mod_p(F, TermOrder::lex(2), Prime(7));
  REQUIRE(G7.generators.size() == 2);
  CHECK(print_poly(G7.generators[0]) == "x");
  CHECK(print_poly(G7.generators[1]) == "y");

  // x - y and x + y coincide mod 2.
  const FpBasis G2 = gb_mod_p(F, TermOrder::lex(2), Prime(2));
  REQUIRE(G2.generators.size() == 1);
  CHECK(print_poly(G2.generators[0]) == "x + y");
}

TEST_CASE("bad reduction") {
  const auto t = test::xy();
  try {
    gb_mod_p({P("1/7*x + y", t)}, TermOrder::lex(2), Prime(7));
    FAIL("expected BadReduction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadReduction);
  }
}

TEST_CASE("majority skeleton") {
  const auto t = test::xy();
  const std::vector<QPoly> F = {P("x + y", t), P("x - y", t)};
  const SampleReport r = sample_structure(F, TermOrder::lex(2), {2, 3, 5, 7, 11});
  CHECK(r.majority == skeleton_of(buchberger(F, TermOrder::lex(2))));
  CHECK(r.agreeing == 4);
  CHECK(r.dissenting == std::vector<std::uint32_t>{2});
  CHECK(r.failed.empty());

  const SampleReport one = sample_structure(F, TermOrder::lex(2), {13});
  CHECK(one.agreeing == 1);
  CHECK(one.dissenting.empty());
}

TEST_CASE("failed samples are classified") {
  const auto t = test::xy();
  const SampleReport r = sample_structure({P("1/3*x + y", t)}, TermOrder::lex(2), {3, 5});
  CHECK(r.failed == std::vector<std::uint32_t>{3});
  CHECK(r.samples[0].status == SampleStatus::BadReduction);
  CHECK(r.agreeing == 1);
}

TEST_CASE("sampling does not depend on the number of workers") {
  const auto& s = test::load("phi11_zero/p1_branch.sys");
  const auto F = test::with_conjugates({s.entry("p1").poly(), s.entry("p3").poly()});
  const auto ord = TermOrder::grevlex(s.table->size());
  const auto primes = default_primes(8);
  const SampleReport a = sample_structure(F, ord, primes, {}, 1);
  const SampleReport b = sample_structure(F, ord, primes, {}, 4);
  CHECK(a.majority == b.majority);
  CHECK(a.agreeing == b.agreeing);
  CHECK(a.dissenting == b.dissenting);
  for (std::size_t i = 0; i < primes.size(); ++i) CHECK(a.samples[i].skeleton == b.samples[i].skeleton);
}

TEST_CASE("p1 branch structure mod 32771 matches the rational basis") {
  const auto& s = test::load("phi11_zero/p1_branch.sys");
  const auto F = test::with_conjugates({s.entry("p1").poly(), s.entry("p3").poly()});
  const auto ord = TermOrder::grevlex(s.table->size());
  CHECK(skeleton_of(gb_mod_p(F, ord, Prime(32771))) == skeleton_of(buchberger(F, ord)));
}

TEST_CASE("final system is unanimous over the default window") {
  const auto& fin = test::load("final_system.sys");
  const auto F = test::with_conjugates(fin.all_polys());
  const auto primes = default_primes(20);
  CHECK(primes.front() > (1u << 15));
  CHECK(primes.back() < (1u << 16));
  const SampleReport r = sample_structure(F, TermOrder::grevlex(fin.table->size()), primes, {}, 4);
  CHECK(r.agreeing == 20);
  REQUIRE(r.majority.size() == 1);
  CHECK(r.majority.front() == std::vector<Monomial>{Monomial(fin.table->size())});
}
