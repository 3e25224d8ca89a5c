#pragma once

#include <cmath>

namespace mollify {

/// Element of R[a, b] / (a^2, b^2): a value together with its first partials
/// in a and b and the mixed partial d^2/da db, all at a = b = 0.
struct Jet11 {
  double f = 0, fa = 0, fb = 0, fab = 0;

  constexpr Jet11() = default;
  constexpr Jet11(double c) : f(c) {}  // NOLINT: constants embed implicitly
  constexpr Jet11(double f_, double fa_, double fb_, double fab_) : f(f_), fa(fa_), fb(fb_), fab(fab_) {}

  static constexpr Jet11 var_a(double at = 0) { return {at, 1, 0, 0}; }
  static constexpr Jet11 var_b(double at = 0) { return {at, 0, 1, 0}; }

  constexpr Jet11& operator+=(const Jet11& o) {
    f += o.f;
    fa += o.fa;
    fb += o.fb;
    fab += o.fab;
    return *this;
  }
  constexpr Jet11& operator-=(const Jet11& o) {
    f -= o.f;
    fa -= o.fa;
    fb -= o.fb;
    fab -= o.fab;
    return *this;
  }
  constexpr Jet11& operator*=(const Jet11& o) {
    *this = {f * o.f, f * o.fa + fa * o.f, f * o.fb + fb * o.f, f * o.fab + fa * o.fb + fb * o.fa + fab * o.f};
    return *this;
  }
};

constexpr Jet11 operator+(Jet11 u, const Jet11& v) { return u += v; }
constexpr Jet11 operator-(Jet11 u, const Jet11& v) { return u -= v; }
constexpr Jet11 operator*(Jet11 u, const Jet11& v) { return u *= v; }
constexpr Jet11 operator-(const Jet11& u) { return {-u.f, -u.fa, -u.fb, -u.fab}; }
constexpr Jet11 operator+(Jet11 u, double c) { return u += Jet11(c); }
constexpr Jet11 operator+(double c, Jet11 u) { return u += Jet11(c); }
constexpr Jet11 operator-(Jet11 u, double c) { return u -= Jet11(c); }
constexpr Jet11 operator-(double c, const Jet11& u) { return Jet11(c) - u; }
constexpr Jet11 operator*(const Jet11& u, double c) { return {u.f * c, u.fa * c, u.fb * c, u.fab * c}; }
constexpr Jet11 operator*(double c, const Jet11& u) { return u * c; }

inline Jet11 exp(const Jet11& u) {
  const double e = std::exp(u.f);
  return {e, e * u.fa, e * u.fb, e * (u.fab + u.fa * u.fb)};
}

}  // namespace mollify
