#pragma once

#include <random>

#include "mollify/mollifier.hpp"

namespace mollify::testing {

// Small random rational in [-range, range] with denominator up to max_den.
inline Rational random_rational(std::mt19937_64& rng, int range, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(-range * d, range * d);
  Rational r(num(rng), d);
  r.canonicalize();
  return r;
}

inline RationalPoly random_profile(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)));
  for (auto& x : c) x = random_rational(rng, 2, 12);
  return RationalPoly::from_linear_up(c);
}

// Valid spec with 0 < theta2 <= theta1 < 1 and degrees <= max_degree.
inline MollifierSpec random_spec(std::mt19937_64& rng, int max_degree = 5) {
  std::uniform_int_distribution<int> num(1, 19);
  Rational a(num(rng), 20), b(num(rng), 20);
  if (a < b) std::swap(a, b);
  return MollifierSpec{a, b, random_profile(rng, max_degree), random_profile(rng, max_degree), {}};
}

}  // namespace mollify::testing
