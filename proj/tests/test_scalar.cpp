#include <doctest.h>

#include <random>

#include "glsuper/errors.hpp"
#include "glsuper/scalar.hpp"
#include "helpers.hpp"

using namespace glsuper;
using testutil::q;
using testutil::x;

TEST_CASE("normalize pulls squares out of the radicand") {
  CHECK(RadicalScalar::normalize(3, 4) == RadicalScalar(6));
  CHECK(RadicalScalar::normalize(1, 12).to_string() == "2*sqrt(3)");
  CHECK(RadicalScalar::normalize(q("7/2"), 0).is_zero());
  CHECK(RadicalScalar::normalize(q("1/3"), 18).to_string() == "1*sqrt(2)");
}

TEST_CASE("addition keeps distinct radicands apart") {
  CHECK((x("2*sqrt(3)") + x("-2*sqrt(3)")).is_zero());
  CHECK(x("1+1*sqrt(2)") + x("1+-1*sqrt(2)") == RadicalScalar(2));
  auto s = x("1*sqrt(2)") + x("1*sqrt(3)");
  CHECK(s.terms().size() == 2);
  CHECK(s.to_string() == "1*sqrt(2)+1*sqrt(3)");
}

TEST_CASE("multiplication renormalizes products of roots") {
  CHECK(x("1*sqrt(2)") * x("1*sqrt(2)") == RadicalScalar(2));
  CHECK((x("1*sqrt(2)") * x("1*sqrt(6)")).to_string() == "2*sqrt(3)");
  CHECK(x("1+1*sqrt(2)") * x("1+-1*sqrt(2)") == RadicalScalar(-1));
}

TEST_CASE("square roots of rationals") {
  CHECK(RadicalScalar::sqrt_of(q("9/4")) == RadicalScalar(q("3/2")));
  CHECK(RadicalScalar::sqrt_of(q("1/2")).to_string() == "1/2*sqrt(2)");
  CHECK_THROWS_AS(RadicalScalar::sqrt_of(-1), Error);
  try {
    RadicalScalar::sqrt_of(-1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeRadicand);
  }
  CHECK(RadicalScalar::sqrt_of_product({2, 3, q("5/7")}, {10, 21}) == RadicalScalar::sqrt_of(q("1/49")));
}

TEST_CASE("factorization bound is enforced") {
  // 1000003 is prime: with a bound of 100 it cannot be certified squarefree.
  CHECK_THROWS_AS(split_square(Integer(1000003) * 1000033, 100), Error);
  auto [s, d] = split_square(Integer(72));
  CHECK(s == 6);
  CHECK(d == 2);
}

TEST_CASE("text round trip") {
  for (const char* text : {"0", "5/3", "-1/2*sqrt(2)", "1+2*sqrt(3)+-7/5*sqrt(10)"}) {
    CHECK(RadicalScalar::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(RadicalScalar::parse("1*sqrt(x)"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(parse_rational(" -6/4 ") == q("-3/2"));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), rad(1, 12);
  auto random_scalar = [&]() {
    RadicalScalar out;
    for (int t = 0; t < 3; ++t) out += RadicalScalar::normalize(Rational(num(rng), den(rng)), rad(rng));
    return out;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_scalar();
    auto b = random_scalar();
    auto c = random_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    Rational r(num(rng) * num(rng), den(rng));
    if (r >= 0) CHECK(RadicalScalar::sqrt_of(r) * RadicalScalar::sqrt_of(r) == RadicalScalar(r));
  }
}
