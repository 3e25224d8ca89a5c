#include "mollify/rational_poly.hpp"

#include <algorithm>
#include <cctype>

#include "mollify/errors.hpp"

namespace mollify {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty rational");
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational r;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ValidationError("malformed rational '" + s + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
    r = Rational(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto ip = body.substr(0, dot);
    const auto fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw ValidationError("malformed decimal '" + s + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    const mpz_class whole(ip.empty() ? "0" : std::string(ip), 10);
    const mpz_class frac(fp.empty() ? "0" : std::string(fp), 10);
    r = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(body)) throw ValidationError("malformed rational '" + s + "'");
    r = Rational(mpz_class(std::string(body), 10));
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

RationalPoly RationalPoly::monomial(int power, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::from_linear_up(std::span<const Rational> coeffs) {
  std::vector<Rational> v(coeffs.size() + 1);
  std::copy(coeffs.begin(), coeffs.end(), v.begin() + 1);
  return RationalPoly(std::move(v));
}

void RationalPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::operator()(double x) const {
  const auto d = to_doubles();
  return horner<double>(d, x);
}

std::vector<double> RationalPoly::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::antiderivative() const {
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return RationalPoly(std::move(v));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  return a + Rational(-1) * b;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& s, const RationalPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& c : v) c *= s;
  return RationalPoly(std::move(v));
}

Rational integrate_unit(const RationalPoly& p) {
  Rational total = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) total += c[i] / static_cast<long>(i + 1);
  total.canonicalize();
  return total;
}

RationalPoly antiderivative(const RationalPoly& p) { return p.antiderivative(); }

RationalPoly affine_compose(const RationalPoly& p, const Rational& s, const Rational& t) {
  // Horner in the polynomial ring: p(sx + t).
  const RationalPoly inner{t, s};
  RationalPoly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + RationalPoly{*it};
  return acc;
}

}  // namespace mollify
