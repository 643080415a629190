#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csn/rational.hpp"

using csn::Rat;

TEST_CASE("construction reduces to lowest terms") {
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(-2, 4).str() == "-1/2");
  CHECK(Rat(2, -4).str() == "-1/2");
  CHECK(Rat(-2, -4).str() == "1/2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(6, 3).str() == "2");
  CHECK_THROWS_AS(Rat(1, 0), csn::DomainError);
}

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("3/-4") == Rat(-3, 4));
  CHECK(Rat::parse("42") == Rat(42));
  CHECK(Rat::parse("-0") == Rat(0));
  CHECK(Rat::parse("2.5") == Rat(5, 2));
  CHECK(Rat::parse("-2.375") == Rat(-19, 8));
  CHECK(Rat::parse("0.125") == Rat(1, 8));
  CHECK(Rat::parse(".5") == Rat(1, 2));
  CHECK_THROWS_AS(Rat::parse(""), csn::ParseError);
  CHECK_THROWS_AS(Rat::parse("a/b"), csn::ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), csn::ParseError);
  CHECK_THROWS_AS(Rat::parse("1.2.3"), csn::ParseError);
}

TEST_CASE("arithmetic basics") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
  CHECK((-Rat(1, 2)).str() == "-1/2");
  CHECK(Rat(1, 3).abs() == Rat(1, 3));
  CHECK(Rat(-1, 3).abs() == Rat(1, 3));
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(-5) < Rat(-4));
  CHECK_THROWS_AS(Rat(1) / Rat(0), csn::DomainError);
}

TEST_CASE("values promoted past 64 bits stay exact and demote back") {
  Rat big(1);
  Rat factor(1000000007LL, 3);
  for (int i = 0; i < 8; ++i) big *= factor;  // numerator ~ 2^240
  mpq_class ref(1);
  mpq_class qf(1000000007L);
  qf /= 3;
  for (int i = 0; i < 8; ++i) ref *= qf;
  CHECK(big.to_mpq() == ref);

  Rat back = big;
  for (int i = 0; i < 8; ++i) back /= factor;
  CHECK(back == Rat(1));
  CHECK(back.str() == "1");
}

TEST_CASE("agrees with a GMP reference on random streams") {
  std::mt19937_64 eng(20240817);
  auto draw = [&](long long bound) {
    return (long long)(eng() % (2 * uint64_t(bound) + 1)) - bound;
  };
  for (int it = 0; it < 4000; ++it) {
    long long bound = (it % 3 == 0) ? 4000000000000000000LL : 1000;
    long long an = draw(bound), ad = draw(bound), bn = draw(bound), bd = draw(bound);
    if (ad == 0 || bd == 0) continue;
    Rat a(an, ad), b(bn, bd);
    mpq_class qa(a.to_mpq()), qb(b.to_mpq());
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (bn != 0) CHECK((a / b).to_mpq() == qa / qb);
    CHECK(a.compare(b) == mpq_cmp(qa.get_mpq_t(), qb.get_mpq_t()));
  }
}

TEST_CASE("printing round trips") {
  for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789123456789"}) {
    CHECK(Rat::parse(s).str() == s);
  }
}
