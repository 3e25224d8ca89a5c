#include "mollify/empirical.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "mollify/arith.hpp"
#include "mollify/errors.hpp"
#include "mollify/kernels.hpp"
#include "mollify/moments.hpp"
#include "mollify/quadrature.hpp"

namespace mollify {

namespace {

std::int64_t realized_length(std::int64_t q, const Rational& theta) {
  // floor(q^theta), nudged so exact powers are not lost to rounding
  const double v = std::pow(static_cast<double>(q), to_double(theta));
  auto y = static_cast<std::int64_t>(std::floor(v * (1 + 1e-12)));
  return std::max<std::int64_t>(y, 1);
}

struct Profiles {
  std::vector<double> P, Q;
  double log_y1, log_y2, L;
  double p(std::int64_t m) const { return horner<double>(P, 1 - std::log(static_cast<double>(m)) / log_y1); }
  double q(std::int64_t m) const { return horner<double>(Q, 1 - std::log(static_cast<double>(m)) / log_y2); }
};

Profiles profiles(std::int64_t q, const MollifierSpec& spec) {
  Profiles p;
  p.P = spec.P.to_doubles();
  p.Q = spec.Q.to_doubles();
  p.L = std::log(static_cast<double>(q));
  p.log_y1 = to_double(spec.theta1) * p.L;
  p.log_y2 = to_double(spec.theta2) * p.L;
  return p;
}

MollifierValues empty_values(const CharacterTable& table, const MollifierSpec& spec) {
  require_valid(spec);
  MollifierValues v;
  v.q = table.modulus();
  v.spec = spec;
  v.characters = table.even_primitive();
  v.y1 = realized_length(v.q, spec.theta1);
  v.y2 = realized_length(v.q, spec.theta2);
  return v;
}

double phi_plus_d(std::int64_t q) { return to_double(phi_plus(q)); }

}  // namespace

std::vector<Complex> MollifierValues::psi() const {
  std::vector<Complex> out(psi1.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi1[i] + psi2[i];
  return out;
}

MollifierValues mollifier_values(const CharacterTable& table, const MollifierSpec& spec) {
  auto v = empty_values(table, spec);
  const auto pr = profiles(v.q, spec);
  const auto tabs = build_tables(std::max(v.y1, v.y2));
  const std::int64_t q = v.q;

  std::vector<double> c1(static_cast<std::size_t>(v.y1));
  for (std::int64_t m = 1; m <= v.y1; ++m)
    if (tabs.mobius[static_cast<std::size_t>(m)] != 0)
      c1[static_cast<std::size_t>(m - 1)] = tabs.mobius[static_cast<std::size_t>(m)] * pr.p(m) / std::sqrt(double(m));
  const auto s1 = batch_twisted_sum(c1, table);

  // conj(chi)(m) chi(n) = chi(n m^{-1} mod q), so fold each (m, n) onto that residue
  std::vector<Complex> c2(static_cast<std::size_t>(q));
  for (std::int64_t m = 2; m <= v.y2; ++m) {
    const double lam = tabs.vonmangoldt[static_cast<std::size_t>(m)];
    if (lam == 0 || gcd64(m, q) != 1) continue;
    const std::int64_t inv = invmod(m % q, q);
    for (std::int64_t n = 1; m * n <= v.y2; ++n) {
      const int mu = tabs.mobius[static_cast<std::size_t>(n)];
      if (mu == 0) continue;
      const std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(n % q) * inv) % q);
      c2[static_cast<std::size_t>(r)] += lam * mu * pr.q(m * n) / std::sqrt(double(m * n));
    }
  }
  const auto s2 = batch_twisted_sum_residues(c2, table);
  for (auto chi : v.characters) {
    v.psi1.push_back(s1[chi]);
    v.psi2.push_back(s2[chi] / pr.L);
  }
  return v;
}

MollifierValues mollifier_values(std::int64_t q, const MollifierSpec& spec) {
  return mollifier_values(enumerate_characters(q), spec);
}

MollifierValues mollifier_values_naive(const CharacterTable& table, const MollifierSpec& spec) {
  auto v = empty_values(table, spec);
  const auto pr = profiles(v.q, spec);
  for (auto chi : v.characters) {
    Complex a{}, b{};
    for (std::int64_t m = 1; m <= v.y1; ++m)
      a += double(mobius_of(m)) * table.value(chi, m) * pr.p(m) / std::sqrt(double(m));
    for (std::int64_t m = 1; m <= v.y2; ++m)
      for (std::int64_t n = 1; m * n <= v.y2; ++n) {
        double lam = 0;
        const auto f = factorize(m);
        if (f.size() == 1) lam = std::log(double(f[0].prime));
        b += lam * double(mobius_of(n)) * std::conj(table.value(chi, m)) * table.value(chi, n) * pr.q(m * n) /
             std::sqrt(double(m * n));
      }
    v.psi1.push_back(a);
    v.psi2.push_back(b / pr.L);
  }
  return v;
}

CensusRecord nonvanishing_census(const CentralValueSet& values, double threshold) {
  if (!(threshold > 0)) throw ValidationError("census threshold must be positive");
  CensusRecord r;
  r.q = values.q;
  r.threshold = threshold;
  r.total_even_primitive = values.values.size();
  r.min_abs_L = values.values.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (const auto& v : values.values) {
    const double a = std::abs(v);
    r.min_abs_L = std::min(r.min_abs_L, a);
    if (a > threshold) ++r.nonzero_count;
  }
  return r;
}

CensusRecord empirical_moments(const MollifierValues& mollifier, const CentralValueSet& values) {
  if (mollifier.q != values.q) throw DomainError("mollifier and central values belong to different moduli");
  if (values.alpha() != 0.0) throw DomainError("central values must be taken at alpha = 0");
  if (mollifier.characters != values.characters) throw DomainError("character sets do not line up");
  auto r = nonvanishing_census(values);
  const auto psi = mollifier.psi();
  Complex s1{};
  double s2 = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const Complex lp = values.values[i] * psi[i];
    s1 += lp;
    s2 += std::norm(lp);
  }
  const double norm = phi_plus_d(values.q);
  r.s1_emp = s1.real() / norm;
  r.s2_emp = s2 / norm;
  r.s1_pred = to_double(s1_main(mollifier.spec));
  r.s2_pred = to_double(lambda_exact(mollifier.spec));
  auto dev = [](double e, double p) { return p == 0 ? std::abs(e) : std::abs(e - p) / std::abs(p); };
  r.dev1 = dev(r.s1_emp, r.s1_pred);
  r.dev2 = dev(r.s2_emp, r.s2_pred);
  r.p1_scale = to_double(mollifier.spec.P(Rational(1)));
  r.has_moments = true;
  return r;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& rows) {
  out << "q,total,nonzero,min_abs_L,s1_emp,s1_pred,s2_emp,s2_pred,dev1,dev2\n";
  for (const auto& r : rows) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%lld,%zu,%zu,%.12g", static_cast<long long>(r.q), r.total_even_primitive, r.nonzero_count,
                  r.min_abs_L);
    out << buf;
    if (r.has_moments) {
      std::snprintf(buf, sizeof buf, ",%.12g,%.12g,%.12g,%.12g,%.6g,%.6g\n", r.s1_emp, r.s1_pred, r.s2_emp, r.s2_pred, r.dev1,
                    r.dev2);
      out << buf;
    } else {
      out << ",,,,,,\n";
    }
  }
}

std::pair<Complex, double> oracle_lemma33(std::int64_t h, std::int64_t k, const CharacterTable& table,
                                          const CentralValueSet& values) {
  const std::int64_t q = table.modulus();
  if (values.q != q) throw DomainError("central values belong to another modulus");
  if (h < 1 || k < 1 || gcd64(h, q) != 1 || gcd64(k, q) != 1) throw ValidationError("need h, k >= 1 coprime to q");
  const double alpha = values.alpha();
  Complex lhs{};
  for (std::size_t i = 0; i < values.characters.size(); ++i) {
    const auto chi = values.characters[i];
    lhs += values.values[i] * std::conj(table.value(chi, h % q)) * table.value(chi, k % q);
  }
  double main = 0;
  if (h % k == 0) {
    const std::int64_t m = h / k;
    const double x = double(m) / std::pow(double(q), 1.1);
    main = phi_plus_d(q) * std::pow(double(m), -0.5 - alpha) * kernel_V(x);
  }
  return {lhs, main};
}

std::pair<Complex, double> oracle_lemma33(std::int64_t h, std::int64_t k, std::int64_t q, double alpha) {
  if (q > 500) throw CapacityError("twisted first-moment oracle limited to q <= 500");
  const auto table = enumerate_characters(q);
  return oracle_lemma33(h, k, table, central_values_smoothed(table, alpha));
}

double lemma33_offdiagonal_mass(std::int64_t y, std::int64_t q, double alpha) {
  if (q > 500) throw CapacityError("twisted first-moment oracle limited to q <= 500");
  const auto table = enumerate_characters(q);
  const auto values = central_values_smoothed(table, alpha);
  double mass = 0;
  for (std::int64_t h = 1; h <= y; ++h) {
    if (gcd64(h, q) != 1) continue;
    for (std::int64_t k = 1; h * k <= y; ++k) {
      if (gcd64(k, q) != 1) continue;
      const auto [lhs, main] = oracle_lemma33(h, k, table, values);
      mass += std::abs(lhs - main) / std::sqrt(double(h * k));
    }
  }
  return mass;
}

std::pair<double, double> oracle_lemma36(int k, double z, const RationalPoly& F1, const RationalPoly& F2, double y1,
                                         double y2) {
  if (k < 1 || k > 4) throw DomainError("divisor-sum main-term oracle supports k = 1..4");
  if (!(y2 > 1) || y2 > y1) throw ValidationError("need 1 < y2 <= y1");
  const double l1 = std::log(y1), l2 = std::log(y2);
  if (std::abs(z) > 1 / l1 + 1e-15) throw ValidationError("need |z| <= 1 / log y1");
  const auto n_max = static_cast<std::int64_t>(std::floor(y2));
  if (n_max > max_sieve_length()) throw CapacityError("y2 exceeds the sieve cap");
  const auto f1 = F1.to_doubles(), f2 = F2.to_doubles();
  const auto dk = divisor_dk(n_max, k);
  double lhs = 0;
  for (std::int64_t n = n_max; n >= 1; --n) {
    const double ln = std::log(double(n));
    lhs += double(dk[static_cast<std::size_t>(n)]) / double(n) * std::exp(z * (l2 - ln)) * horner<double>(f1, 1 - ln / l1) *
           horner<double>(f2, 1 - ln / l2);
  }
  double fact = 1;
  for (int i = 2; i < k; ++i) fact *= i;
  const double integral = integrate_gl(
      [&](double x) {
        return std::exp(z * l2 * x) * std::pow(1 - x, k - 1) * horner<double>(f1, 1 - (1 - x) * l2 / l1) * horner<double>(f2, x);
      },
      0.0, 1.0, 64);
  return {lhs, std::pow(l2, k) / fact * integral};
}

std::pair<double, double> oracle_lemma37(int k, double sigma, double y) {
  if (k < 1 || k > 4) throw DomainError("divisor-sum bound oracle supports k = 1..4");
  if (sigma < -1 || sigma > 0) throw DomainError("need -1 <= sigma <= 0");
  if (!(y > 1)) throw ValidationError("need y > 1");
  const auto n_max = static_cast<std::int64_t>(std::floor(y));
  if (n_max > max_sieve_length()) throw CapacityError("y exceeds the sieve cap");
  const double ly = std::log(y);
  const auto dk = divisor_dk(n_max, k);
  double lhs = 0, harmonic = 0;
  for (std::int64_t n = n_max; n >= 1; --n) {
    lhs += double(dk[static_cast<std::size_t>(n)]) / double(n) * std::exp(sigma * (ly - std::log(double(n))));
    harmonic += 1.0 / double(n);
  }
  const double C = harmonic / ly;
  const double m = sigma == 0 ? ly : std::min(1 / std::abs(sigma), ly);
  return {lhs, C * std::pow(ly, k - 1) * m};
}

}  // namespace mollify
