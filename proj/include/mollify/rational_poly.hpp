#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mollify {

using Rational = mpq_class;

/// Parses "num/den", an integer, or a finite decimal such as "-0.05" exactly.
Rational parse_rational(std::string_view text);

/// Always "num/den", including den == 1.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

/// Dense univariate polynomial with exact rational coefficients; coeffs[i]
/// multiplies x^i and there are never trailing zeros.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly monomial(int power, const Rational& c = 1);

  /// Polynomial with zero constant term and the given coefficients of x^1, x^2, ...
  static RationalPoly from_linear_up(std::span<const Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int power) const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  RationalPoly derivative() const;
  RationalPoly antiderivative() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::vector<double> to_doubles() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Exact integral of p over [0, 1].
Rational integrate_unit(const RationalPoly& p);

/// Antiderivative with zero constant term.
RationalPoly antiderivative(const RationalPoly& p);

/// p(s x + t), exact.
RationalPoly affine_compose(const RationalPoly& p, const Rational& s, const Rational& t);

/// Horner evaluation over any ring that accepts double coefficients
/// (double, long double, Jet11, ...).
template <typename T>
T horner(std::span<const double> coeffs, const T& x) {
  T acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace mollify
