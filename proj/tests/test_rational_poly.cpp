#include <random>

#include "doctest.h"
#include "mollify/errors.hpp"
#include "mollify/mollifier.hpp"
#include "mollify/rational_poly.hpp"

using namespace mollify;

namespace {

RationalPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-20, 20), den(1, 9);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Rational(num(rng), den(rng));
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("parse and format rationals") {
  CHECK(parse_rational("21/20") == Rational(21, 20));
  CHECK(parse_rational("-1/20") == Rational(-1, 20));
  CHECK(parse_rational("0.9") == Rational(9, 10));
  CHECK(parse_rational("-0.05") == Rational(-1, 20));
  CHECK(parse_rational("1.05") == Rational(21, 20));
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
  CHECK(format_rational(Rational(2, 4)) == "1/2");
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ValidationError);
}

TEST_CASE("normalization drops trailing zeros") {
  const RationalPoly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(RationalPoly{0, 0}.is_zero());
  CHECK(RationalPoly{}.degree() == -1);
}

TEST_CASE("antiderivative") {
  CHECK(antiderivative(RationalPoly{0, Rational(9, 10)}) == RationalPoly{0, 0, Rational(9, 20)});
  CHECK(antiderivative(RationalPoly{}).is_zero());
  CHECK(antiderivative(RationalPoly::monomial(2)) == RationalPoly::monomial(3, Rational(1, 3)));
}

TEST_CASE("integrate_unit") {
  CHECK(integrate_unit(RationalPoly{0, 1}) == Rational(1, 2));
  const RationalPoly lin{Rational(21, 20), Rational(-1, 10)};
  CHECK(integrate_unit(lin * lin) == Rational(1201, 1200));
  CHECK(integrate_unit(RationalPoly{1}) == 1);
}

TEST_CASE("affine_compose") {
  CHECK(affine_compose(RationalPoly::monomial(2), 2, 1) == (RationalPoly{1, 4, 4}));
  const auto P = paper_preset().P;
  CHECK(affine_compose(P, 1, 0) == P);
  const Rational t1(1, 2), t2(1, 2);
  CHECK(affine_compose(P, t2 / t1, 1 - t2 / t1) == P);
}

TEST_CASE("polynomial algebra properties") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 6);
    REQUIRE(antiderivative(p).derivative() == p);
    REQUIRE(integrate_unit(p * q) == integrate_unit(q * p));
    REQUIRE(integrate_unit((p + r) * q) == integrate_unit(p * q) + integrate_unit(r * q));
    const Rational s(trial % 7 - 3, 5), t(trial % 5 + 1, 3);
    REQUIRE(affine_compose(p * q, s, t) == affine_compose(p, s, t) * affine_compose(q, s, t));
    REQUIRE(p(Rational(1, 3)) * q(Rational(1, 3)) == (p * q)(Rational(1, 3)));
  }
}

TEST_CASE("mollifier validation") {
  auto s = paper_preset();
  CHECK(spec_violations(s).empty());
  CHECK(s.outside_second_moment_range());
  s.P = RationalPoly{1, 1};
  CHECK(spec_violations(s).size() == 1);
  CHECK_THROWS_AS(require_valid(s), ValidationError);
  s = paper_preset();
  s.theta2 = Rational(3, 4);
  CHECK_THROWS_AS(require_valid(s), ValidationError);
  s.theta1 = Rational(2, 5);
  s.theta2 = Rational(1, 5);
  CHECK_FALSE(s.outside_second_moment_range());
}
