#include <cmath>
#include <sstream>

#include "doctest.h"
#include "mollify/arith.hpp"
#include "mollify/empirical.hpp"
#include "mollify/errors.hpp"
#include "mollify/kernels.hpp"
#include "mollify/moments.hpp"

using namespace mollify;

namespace {

MollifierSpec quarter_spec() {
  auto s = paper_preset();
  s.theta1 = Rational(1, 4);
  s.theta2 = Rational(1, 4);
  return s;
}

std::size_t position_of(const std::vector<std::size_t>& chars, std::size_t chi) {
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (chars[i] == chi) return i;
  FAIL("missing character");
  return 0;
}

}  // namespace

TEST_CASE("psi_2 with y2 = 2 has a single term") {
  MollifierSpec s{Rational(3, 10), Rational(3, 10), RationalPoly{0, 1}, RationalPoly{0, 1, 1}, {}};
  const auto table = enumerate_characters(13);
  const auto v = mollifier_values(table, s);
  CHECK(v.y1 == 2);
  CHECK(v.y2 == 2);
  const double L = std::log(13.0);
  const double arg = 1 - std::log(2.0) / (0.3 * L);
  const double q2 = arg + arg * arg;
  for (std::size_t i = 0; i < v.characters.size(); ++i) {
    const Complex expected = std::log(2.0) * std::conj(table.value(v.characters[i], 2)) * q2 / std::sqrt(2.0) / L;
    CHECK(std::abs(v.psi2[i] - expected) < 1e-14);
  }
}

TEST_CASE("psi_2 vanishes when y2 = 1") {
  MollifierSpec s{Rational(1, 2), Rational(1, 10), RationalPoly{0, 1}, RationalPoly{0, 1}, {}};
  const auto v = mollifier_values(101, s);
  CHECK(v.y2 == 1);
  for (auto x : v.psi2) CHECK(x == Complex{});
}

TEST_CASE("batch mollifier equals the naive loops for q <= 50") {
  for (std::int64_t q = 5; q <= 50; ++q) {
    const auto table = enumerate_characters(q);
    for (const auto& spec : {paper_preset(), MollifierSpec{Rational(3, 4), Rational(2, 3), RationalPoly{0, 2, -1},
                                                            RationalPoly{0, Rational(1, 3), 1, -2}, {}}}) {
      const auto a = mollifier_values(table, spec);
      const auto b = mollifier_values_naive(table, spec);
      REQUIRE(a.characters == b.characters);
      for (std::size_t i = 0; i < a.characters.size(); ++i) {
        CHECK(std::abs(a.psi1[i] - b.psi1[i]) < 1e-12);
        CHECK(std::abs(a.psi2[i] - b.psi2[i]) < 1e-12);
      }
    }
  }
}

TEST_CASE("mollifier values are conjugate-symmetric") {
  const auto table = enumerate_characters(1009);
  const auto v = mollifier_values(table, paper_preset());
  for (std::size_t i = 0; i < v.characters.size(); ++i) {
    const auto j = position_of(v.characters, table.conjugate(v.characters[i]));
    CHECK(std::abs(v.psi1[i] - std::conj(v.psi1[j])) < 1e-12);
    CHECK(std::abs(v.psi2[i] - std::conj(v.psi2[j])) < 1e-12);
  }
}

TEST_CASE("unit mollifier gives the plain first moment") {
  MollifierSpec s{Rational(1, 10), Rational(1, 10), RationalPoly{0, 1}, {}, {}};
  const auto table = enumerate_characters(101);
  const auto v = mollifier_values(table, s);
  CHECK(v.y1 == 1);
  for (auto x : v.psi()) CHECK(x == Complex(1, 0));
  const auto values = central_values_smoothed(table, 0.0);
  const auto r = empirical_moments(v, values);
  Complex sum{};
  for (auto x : values.values) sum += x;
  CHECK(r.s1_emp == doctest::Approx(sum.real() / to_double(phi_plus(101))));
  CHECK(r.s1_pred == 1);
}

TEST_CASE("empirical moments at theta = 1/4") {
  double previous = 1e9;
  int improving = 0;
  for (std::int64_t q : {101, 1009, 10007}) {
    const auto table = enumerate_characters(q);
    const auto r = empirical_moments(mollifier_values(table, quarter_spec()), central_values_smoothed(table, 0.0));
    CHECK(std::isfinite(r.s1_emp));
    CHECK(std::isfinite(r.s2_emp));
    CHECK(r.s2_emp > 0);
    CHECK(r.s2_emp > r.s1_emp * r.s1_emp);
    CHECK(r.s1_pred == doctest::Approx(to_double(s1_main(quarter_spec()))));
    CHECK(r.s2_pred == doctest::Approx(to_double(lambda_exact(quarter_spec()))));
    CHECK(r.nonzero_count == r.total_even_primitive);
    const double d = std::abs(r.s1_emp - r.s1_pred);
    if (d <= previous) ++improving;
    previous = d;
  }
  CHECK(improving >= 2);
}

TEST_CASE("moment inputs must match") {
  const auto v = mollifier_values(101, paper_preset());
  CHECK_THROWS_AS(empirical_moments(v, central_values_smoothed(103, 0.0)), DomainError);
  CHECK_THROWS_AS(empirical_moments(v, central_values_smoothed(101, 0.1)), DomainError);
}

TEST_CASE("non-vanishing census") {
  auto r = nonvanishing_census(central_values_smoothed(5, 0.0));
  CHECK(r.total_even_primitive == 1);
  CHECK(r.nonzero_count == 1);
  r = nonvanishing_census(central_values_smoothed(7, 0.0));
  CHECK(r.total_even_primitive == 2);
  CHECK(r.nonzero_count == 2);
  r = nonvanishing_census(central_values_smoothed(3, 0.0));
  CHECK(r.total_even_primitive == 0);
  CHECK(r.nonzero_count == 0);
  for (std::int64_t q : {11, 13, 101, 211}) CHECK(nonvanishing_census(central_values_smoothed(q, 0.0)).total_even_primitive == std::size_t(q - 3) / 2);
  for (std::int64_t q = 5; q <= 200; ++q) {
    const auto table = enumerate_characters(q);
    CHECK(nonvanishing_census(central_values_smoothed(table, 0.0)).total_even_primitive == table.even_primitive().size());
  }
  CHECK_THROWS_AS(nonvanishing_census(central_values_smoothed(5, 0.0), 0.0), ValidationError);
}

TEST_CASE("census csv") {
  std::ostringstream out;
  write_census_csv(out, {nonvanishing_census(central_values_smoothed(5, 0.0))});
  CHECK(out.str().rfind("q,total,nonzero,min_abs_L,s1_emp,s1_pred,s2_emp,s2_pred,dev1,dev2\n5,1,1,", 0) == 0);
}

TEST_CASE("diagonal of the twisted first moment") {
  const double phi = to_double(phi_plus(101));
  auto [lhs, main] = oracle_lemma33(1, 1, 101, 0.0);
  const double X = std::pow(101.0, 1.1);
  CHECK(main == doctest::Approx(phi * kernel_V(1 / X)).epsilon(1e-12));
  CHECK(main == doctest::Approx(phi).epsilon(1e-3));
  std::tie(lhs, main) = oracle_lemma33(2, 1, 101, 0.0);
  CHECK(main == doctest::Approx(phi / std::sqrt(2.0) * kernel_V(2 / X)).epsilon(1e-12));
  std::tie(lhs, main) = oracle_lemma33(1, 2, 101, 0.0);
  CHECK(main == 0);
  CHECK(std::isfinite(lhs.real()));
  CHECK_THROWS_AS(oracle_lemma33(101, 1, 101, 0.0), ValidationError);
}

TEST_CASE("off-diagonal mass of the twisted first moment") {
  // C calibrated on q = 101, y = 10 with a little headroom
  const double C = 2.5;
  for (std::int64_t q : {101, 211, 401})
    for (std::int64_t y : {10, 40, 80}) CHECK(lemma33_offdiagonal_mass(y, q, 0.0) <= C * std::pow(double(y * q), 0.6));
}

TEST_CASE("divisor sums against their integral main terms") {
  const RationalPoly one{1};
  auto [lhs, rhs] = oracle_lemma36(1, 0.0, one, one, std::exp(10.0), std::exp(10.0));
  CHECK(lhs == doctest::Approx(10.577).epsilon(1e-4));
  CHECK(rhs == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(std::abs(lhs - rhs) <= 2);
  double prev_gap = 1e9;
  for (double l : {8.0, 10.0, 12.0}) {
    for (int k : {1, 2}) {
      std::tie(lhs, rhs) = oracle_lemma36(k, 0.0, one, one, std::exp(l), std::exp(l));
      CHECK(std::abs(lhs / rhs - 1) <= 3 / l);
    }
    CHECK(std::abs(lhs / rhs - 1) < prev_gap);
    prev_gap = std::abs(lhs / rhs - 1);
  }
  // collapse y1 = y2 with F1 = F2 and a shift
  const RationalPoly f{0, 1, 1};
  const double y = std::exp(9.0);
  std::tie(lhs, rhs) = oracle_lemma36(2, 0.5 / 9.0, f, f, y, y);
  CHECK(std::abs(lhs - rhs) <= 3 * 9.0);
  CHECK_THROWS_AS(oracle_lemma36(5, 0, one, one, 100, 100), DomainError);
  CHECK_THROWS_AS(oracle_lemma36(1, 0, one, one, 10, 100), ValidationError);
}

TEST_CASE("divisor sums with a negative twist stay under the bound") {
  const double y = std::exp(10.0);
  auto [lhs, bound] = oracle_lemma37(1, 0.0, y);
  CHECK(lhs == doctest::Approx(bound));
  for (int k = 1; k <= 4; ++k) {
    double prev = 1e300;
    for (double s : {0.0, -0.05, -0.2, -0.5, -1.0}) {
      std::tie(lhs, bound) = oracle_lemma37(k, s, y);
      CHECK(lhs <= bound * (1 + 1e-12));
      CHECK(lhs <= prev);
      prev = lhs;
    }
  }
  std::tie(lhs, bound) = oracle_lemma37(1, -1.0, y);
  CHECK(lhs <= 1.0);
  CHECK_THROWS_AS(oracle_lemma37(1, 0.5, y), DomainError);
}
