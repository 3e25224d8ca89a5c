#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "mollify/arith.hpp"
#include "mollify/central_values.hpp"
#include "mollify/errors.hpp"

using namespace mollify;

namespace {

double max_gap(const CentralValueSet& a, const CentralValueSet& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

std::size_t position_of(const CentralValueSet& set, std::size_t chi) {
  for (std::size_t i = 0; i < set.characters.size(); ++i)
    if (set.characters[i] == chi) return i;
  FAIL("character not in set");
  return 0;
}

}  // namespace

TEST_CASE("q=5 central value is real and positive") {
  const auto set = central_values_smoothed(5, 0.0);
  REQUIRE(set.size() == 1);
  CHECK(std::abs(set.values[0].imag()) < 1e-12);
  CHECK(set.values[0].real() > 0);
  CHECK(set.values[0].real() == doctest::Approx(0.2317509475).epsilon(1e-9));
}

TEST_CASE("no even primitive characters below 5") {
  CHECK(central_values_smoothed(3, 0.0).size() == 0);
  CHECK(central_values_smoothed(4, 0.0).size() == 0);
}

TEST_CASE("functional equation and root numbers for q <= 500") {
  for (std::int64_t q = 5; q <= 500; ++q) {
    const auto table = enumerate_characters(q);
    const auto set = central_values_smoothed(table, 0.0);
    CHECK(set.epsilon.size() == set.values.size());
    for (auto e : set.epsilon) CHECK(std::abs(std::abs(e) - 1.0) < 1e-10);
    if (set.size() > 0) CHECK(functional_equation_residual(set, table) < 1e-8);
  }
}

TEST_CASE("conjugate characters give conjugate values") {
  for (std::int64_t q : {13, 60, 101, 243}) {
    const auto table = enumerate_characters(q);
    for (double alpha : {0.0, 0.2}) {
      const auto set = central_values_smoothed(table, alpha);
      for (std::size_t i = 0; i < set.size(); ++i) {
        const auto j = position_of(set, table.conjugate(set.characters[i]));
        CHECK(std::abs(set.values[i] - std::conj(set.values[j])) < 1e-8);
      }
    }
  }
}

TEST_CASE("three methods agree at q = 5, 13, 101") {
  for (std::int64_t q : {5, 13, 101}) {
    const auto table = enumerate_characters(q);
    const auto a = central_values_smoothed(table, 0.0);
    const auto v = central_values_vkernel(table, 0.0);
    const auto h = central_values_hurwitz(table, {0.5, 0.0});
    CHECK(max_gap(a, v) < 1e-6);
    CHECK(max_gap(a, h) < 1e-8);
    CHECK(max_gap(v, h) < 1e-6);
  }
}

TEST_CASE("V-kernel sum at q=13 with alpha = 1/log 13") {
  const double alpha = 1.0 / std::log(13.0);
  const auto table = enumerate_characters(13);
  const auto v = central_values_vkernel(table, alpha);
  const auto h = central_values_hurwitz(table, {0.5 + alpha, 0.0});
  CHECK(max_gap(v, h) < 1e-6);
  CHECK(v.alpha() == doctest::Approx(alpha));
}

TEST_CASE("one-sided V sum without the dual side misses by a visible amount") {
  const auto table = enumerate_characters(13);
  VKernelOptions raw;
  raw.include_dual = false;
  const auto v = central_values_vkernel(table, 0.0, raw);
  const auto full = central_values_vkernel(table, 0.0);
  CHECK(max_gap(v, full) > 1e-3);
  CHECK(full.dual_correction == doctest::Approx(max_gap(v, full)).epsilon(1e-6));
}

TEST_CASE("V-kernel truncation at e^10 vs e^12") {
  const auto table = enumerate_characters(101);
  VKernelOptions wide;
  wide.truncation_log = 12.0;
  CHECK(max_gap(central_values_vkernel(table, 0.0), central_values_vkernel(table, 0.0, wide)) < 1e-9);
}

TEST_CASE("V-kernel capacity") {
  CHECK_THROWS_AS(central_values_vkernel(2003, 0.0), CapacityError);
  CHECK_THROWS_AS(central_values_hurwitz(2003, {0.5, 0.0}), CapacityError);
}

TEST_CASE("Hurwitz zeta special values") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 1.0) - pi * pi / 6) < 1e-13);
  CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 0.5) - pi * pi / 2) < 1e-12);
  CHECK(std::abs(hurwitz_zeta({0.5, 0.0}, 1.0) - (-1.4603545088095868)) < 1e-12);
}

TEST_CASE("L(2, chi) against the Dirichlet series") {
  for (std::int64_t q : {5, 12, 101}) {
    const auto table = enumerate_characters(q);
    // principal character: zeta(2) * prod_{p | q} (1 - p^-2)
    std::vector<Complex> by_residue(static_cast<std::size_t>(q));
    for (std::int64_t a = 1; a < q; ++a)
      if (table.log_index(a) >= 0) by_residue[static_cast<std::size_t>(a)] = hurwitz_zeta({2.0, 0.0}, double(a) / q);
    const auto sums = batch_twisted_sum_residues(by_residue, table);
    double expected = std::numbers::pi * std::numbers::pi / 6;
    for (auto [p, e] : factorize(q)) expected *= 1.0 - 1.0 / double(p * p);
    CHECK(std::abs(sums[0] / double(q * q) - expected) < 1e-12);

    // Abel summation bounds the tail past N by q / N^2 for a non-principal character
    const std::int64_t N = 1'000'000;
    for (std::size_t chi = 1; chi < std::min<std::size_t>(table.size(), 4); ++chi) {
      Complex partial{};
      for (std::int64_t n = N; n >= 1; --n) partial += table.value(chi, n % q) / (double(n) * double(n));
      const double tail = double(q) / (double(N) * double(N));
      CHECK(std::abs(partial - sums[chi] / double(q * q)) < tail + 1e-9);
    }
  }
}

TEST_CASE("pair product double sum") {
  const auto table = enumerate_characters(5);
  const auto set = central_values_smoothed(table, 0.0);
  const auto chi = set.characters[0];
  const Complex pp = pair_product_afe(table, chi, 0.0, 0.0);
  CHECK(std::abs(pp - std::norm(set.values[0])) < 1e-5);
  CHECK(std::abs(pair_product_afe(table, chi, 0.05, 0.05).imag()) < 1e-8);

  const auto t13 = enumerate_characters(13);
  const auto s13 = central_values_smoothed(t13, 0.0);
  const auto c = s13.characters[1];
  const auto a1 = central_values_smoothed(t13, 0.03);
  const auto b1 = central_values_smoothed(t13, -0.02);
  const Complex lhs = pair_product_afe(t13, c, 0.03, -0.02);
  const Complex expected = a1.values[position_of(a1, c)] * b1.values[position_of(b1, t13.conjugate(c))];
  CHECK(std::abs(lhs - expected) < 1e-5);
  const Complex swapped = pair_product_afe(t13, t13.conjugate(c), -0.02, 0.03);
  CHECK(std::abs(lhs - swapped) < 1e-8);
}

TEST_CASE("binary cache round trip") {
  const auto set = central_values_smoothed(101, 0.125);
  const auto path = std::filesystem::temp_directory_path() / "mollify_cache_test.bin";
  write_cache(path, set);
  const auto back = read_cache(path);
  CHECK(back.q == 101);
  CHECK(back.alpha() == 0.125);
  CHECK(back.method == CentralMethod::SmoothedAfe);
  REQUIRE(back.values.size() == set.values.size());
  for (std::size_t i = 0; i < set.size(); ++i) CHECK(back.values[i] == set.values[i]);
  CHECK(std::filesystem::file_size(path) == 32 + 16 * set.size());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_cache(path), DomainError);
}
