#include "support.hpp"

using namespace idealkit;

TEST_CASE("rational arithmetic") {
  CHECK(rat_arith(Rational(1, 2), Rational(1, 3), ArithOp::Add) == Rational(5, 6));
  CHECK(rat_arith(Rational(2, 5), Rational(5, 2), ArithOp::Mul) == Rational(1));
  CHECK(rat_arith(Rational(1, 2), Rational(1, 3), ArithOp::Sub) == Rational(1, 6));
  CHECK(rat_arith(Rational(3, 4), Rational(3, 2), ArithOp::Div) == Rational(1, 2));
  try {
    rat_arith(Rational(1), Rational(0), ArithOp::Div);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("rational normal form") {
  CHECK(Rational(mpz_class(6), mpz_class(-4)).to_string() == "-3/2");
  CHECK(Rational(0).denominator() == 1);
  CHECK(Rational(-7).to_string() == "-7");
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), Error);
}

TEST_CASE("reduction mod p") {
  CHECK(reduce_mod_p(Rational(1, 2), Prime(5)).value() == 3);
  CHECK(reduce_mod_p(Rational(-12), Prime(7)).value() == 2);
  try {
    reduce_mod_p(Rational(1, 5), Prime(5));
    FAIL("expected BadReduction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadReduction);
  }
}

TEST_CASE("inverse mod p") {
  CHECK(fp_inv(FpElement(3, Prime(7))).value() == 5);
  CHECK(fp_inv(FpElement::one(Prime(65521))).value() == 1);
  try {
    fp_inv(FpElement(0, Prime(7)));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("prime validation") {
  CHECK_NOTHROW(Prime(2));
  CHECK_NOTHROW(Prime(4294967291ull));
  for (std::uint64_t bad : {0ull, 1ull, 4ull, 65535ull, 4294967311ull}) {
    try {
      Prime{bad};
      FAIL("expected NotPrime");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPrime);
    }
  }
}

TEST_CASE("residues from different fields do not mix") {
  CHECK_THROWS_AS(FpElement(1, Prime(5)) + FpElement(1, Prime(7)), Error);
}

TEST_CASE("negative residues wrap") {
  CHECK(FpElement(-1, Prime(7)).value() == 6);
  CHECK((FpElement(3, Prime(7)) - FpElement(5, Prime(7))).value() == 5);
}

TEST_CASE("prime windows") {
  const auto ps = primes_between(1u << 15, 1u << 16, 20);
  REQUIRE(ps.size() == 20);
  CHECK(ps.front() == 32771);
  CHECK(std::is_sorted(ps.begin(), ps.end()));
  for (auto p : ps) CHECK(is_prime(p));
  CHECK(primes_between(10, 20, 100) == std::vector<std::uint32_t>{11, 13, 17, 19});
}
