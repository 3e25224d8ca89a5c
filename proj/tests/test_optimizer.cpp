#include <random>
#include <sstream>

#include "doctest.h"
#include "mollify/errors.hpp"
#include "mollify/moments.hpp"
#include "mollify/optimizer.hpp"

using namespace mollify;

namespace {

const Rational half(1, 2);

std::vector<Rational> random_integer_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> a(n);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : a) {
      x = d(rng);
      nonzero = nonzero || x != 0;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("forms reproduce the exact moments") {
  const auto m = build_forms(1, 0, half, half);
  CHECK(m.c[0] == 1);
  CHECK(m.M[0][0] == 3);
  CHECK(m.basis == std::vector<std::string>{"P:x^1"});

  std::mt19937_64 rng(3);
  for (auto [dP, dQ] : {std::pair{2, 1}, std::pair{3, 3}, std::pair{5, 2}}) {
    const auto model = build_forms(dP, dQ, Rational(2, 5), Rational(1, 5));
    for (std::size_t i = 0; i < model.size(); ++i)
      for (std::size_t j = 0; j < model.size(); ++j) CHECK(model.M[i][j] == model.M[j][i]);
    CHECK(is_positive_semidefinite(model.M));
    for (int k = 0; k < 20; ++k) {
      const auto a = random_integer_vector(rng, model.size());
      const auto spec = model.spec_for(a);
      CHECK(model.linear(a) == s1_main(spec));
      CHECK(model.quadratic(a) == lambda_exact(spec));
    }
  }
}

TEST_CASE("second-moment form is positive on random vectors") {
  std::mt19937_64 rng(5);
  const auto model = build_forms(4, 3, half, half);
  for (int k = 0; k < 50; ++k) CHECK(model.quadratic(random_integer_vector(rng, model.size())) > 0);
}

TEST_CASE("semidefiniteness check") {
  CHECK(is_positive_semidefinite({{1, 1}, {1, 1}}));
  CHECK_FALSE(is_positive_semidefinite({{1, 2}, {2, 1}}));
  CHECK_FALSE(is_positive_semidefinite({{0, 1}, {1, 0}}));
  CHECK_FALSE(is_positive_semidefinite({{-1}}));
  CHECK(is_positive_semidefinite({{0, 0}, {0, 2}}));
}

TEST_CASE("single-piece optimum is one third at P proportional to x") {
  const auto r = maximize_proportion(build_forms(1, 0, half, half));
  CHECK(r.proportion == Rational(1, 3));
  CHECK(r.P.degree() == 1);
  CHECK(r.Q.is_zero());
  CHECK(r.s1 == r.lambda);
}

TEST_CASE("degree (2,1) optimum contains the preset") {
  const auto r = maximize_proportion(build_forms(2, 1, half, half));
  CHECK(r.proportion >= proportion(paper_preset()));
  CHECK(r.proportion == proportion(MollifierSpec{half, half, r.P, r.Q, {}}));
  // rescaling
  const auto doubled = MollifierSpec{half, half, Rational(2) * r.P, Rational(2) * r.Q, {}};
  CHECK(proportion(doubled) == r.proportion);
}

TEST_CASE("scan is monotone in both degrees") {
  const auto rows = degree_scan(4, 3, half, half);
  REQUIRE(rows.size() == 16);
  auto at = [&](int dP, int dQ) -> const OptimizationResult& {
    for (const auto& r : rows)
      if (r.dP == dP && r.dQ == dQ) return r.result;
    FAIL("missing row");
    return rows[0].result;
  };
  CHECK(at(1, 0).proportion == Rational(1, 3));
  CHECK(at(2, 1).proportion >= at(1, 0).proportion);
  CHECK(to_double(at(2, 1).proportion) >= 0.341103);
  for (const auto& r : rows) {
    CHECK(r.result.proportion == proportion(MollifierSpec{half, half, r.result.P, r.result.Q, {}}));
    if (r.dP > 1) CHECK(r.result.proportion >= at(r.dP - 1, r.dQ).proportion);
    if (r.dQ > 0) CHECK(r.result.proportion >= at(r.dP, r.dQ - 1).proportion);
  }
  std::ostringstream csv;
  write_scan_csv(csv, rows);
  CHECK(csv.str().rfind("dP,dQ,proportion_exact,proportion_decimal,coeffs\n", 0) == 0);
  CHECK(csv.str().find("1,0,1/3,0.333333333333,") != std::string::npos);
}

TEST_CASE("singular systems") {
  const RationalMatrix M{{1, 1}, {1, 1}};
  const auto sol = solve_symmetric(M, {1, 1});
  CHECK(sol.rank == 1);
  CHECK(sol.x == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(solve_symmetric(M, {1, 0}), DegenerateError);
  const auto full = solve_symmetric({{2, 1}, {1, 3}}, {1, 2});
  CHECK(full.rank == 2);
  CHECK(full.x == std::vector<Rational>{Rational(1, 5), Rational(3, 5)});
}

TEST_CASE("first moment identically zero") {
  auto m = build_forms(1, 1, half, half);
  m.c = {0, 0};
  CHECK_THROWS_AS(maximize_proportion(m), DegenerateError);
}

TEST_CASE("scan bounds") {
  CHECK_THROWS_AS(degree_scan(13, 0, half, half), ValidationError);
  CHECK_THROWS_AS(build_forms(0, 1, half, half), ValidationError);
}
