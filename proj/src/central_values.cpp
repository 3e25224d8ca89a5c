#include "mollify/central_values.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "mollify/arith.hpp"
#include "mollify/errors.hpp"
#include "mollify/kernels.hpp"

namespace mollify {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier-compensated accumulator.
struct CompensatedSum {
  Complex sum{};
  Complex carry{};
  void add(Complex v) {
    const Complex t = sum + v;
    auto fix = [](double s, double x, double tt) { return std::abs(s) >= std::abs(x) ? (s - tt) + x : (x - tt) + s; };
    carry += Complex(fix(sum.real(), v.real(), t.real()), fix(sum.imag(), v.imag(), t.imag()));
    sum = t;
  }
  Complex value() const { return sum + carry; }
};

CentralValueSet empty_set(const CharacterTable& table, std::complex<double> s, CentralMethod method) {
  CentralValueSet set;
  set.q = table.modulus();
  set.s = s;
  set.method = method;
  set.characters = table.even_primitive();
  set.epsilon = root_numbers(table, set.characters);
  return set;
}

std::vector<Complex> character_values_by_residue(const CharacterTable& table, std::size_t chi) {
  const auto q = static_cast<std::size_t>(table.modulus());
  std::vector<Complex> v(q);
  for (std::size_t a = 0; a < q; ++a) v[a] = table.value(chi, static_cast<std::int64_t>(a));
  return v;
}

}  // namespace

std::vector<Complex> root_numbers(const CharacterTable& table, const std::vector<std::size_t>& chars) {
  const std::int64_t q = table.modulus();
  std::vector<Complex> additive(static_cast<std::size_t>(q));
  for (std::int64_t a = 0; a < q; ++a) additive[static_cast<std::size_t>(a)] = std::polar(1.0, 2.0 * kPi * a / q);
  const auto tau = batch_twisted_sum_residues(additive, table);
  std::vector<Complex> eps;
  eps.reserve(chars.size());
  for (auto chi : chars) eps.push_back(tau[chi] / std::sqrt(static_cast<double>(q)));
  return eps;
}

CentralValueSet central_values_smoothed(const CharacterTable& table, double alpha) {
  if (!(std::abs(alpha) < 0.5)) throw DomainError("smoothed functional equation needs |alpha| < 1/2");
  const double s = 0.5 + alpha;
  auto set = empty_set(table, {s, 0.0}, CentralMethod::SmoothedAfe);
  if (set.characters.empty()) return set;

  const double q = static_cast<double>(table.modulus());
  const double a1 = s / 2.0, a2 = (1.0 - s) / 2.0;
  std::vector<double> direct, dual;
  for (std::int64_t n = 1;; ++n) {
    const double x = kPi * static_cast<double>(n) * static_cast<double>(n) / q;
    const double k1 = boost::math::gamma_q(a1, x);
    const double k2 = boost::math::gamma_q(a2, x);
    if (k1 < 1e-14 && k2 < 1e-14) break;
    if (n > 1'000'000'000) throw AccuracyError("smoothed kernel failed to decay");
    const double ln = std::log(static_cast<double>(n));
    direct.push_back(std::exp(-s * ln) * k1);
    dual.push_back(std::exp(-(1.0 - s) * ln) * k2);
  }
  const auto b1 = batch_twisted_sum(direct, table);
  const auto b2 = batch_twisted_sum(dual, table);
  const double factor = std::pow(kPi / q, s - 0.5) * std::exp(std::lgamma(a2) - std::lgamma(a1));
  for (std::size_t i = 0; i < set.characters.size(); ++i) {
    const auto chi = set.characters[i];
    set.values.push_back(b1[chi] + set.epsilon[i] * factor * b2[table.conjugate(chi)]);
  }
  return set;
}

CentralValueSet central_values_smoothed(std::int64_t q, double alpha) {
  return central_values_smoothed(enumerate_characters(q), alpha);
}

CentralValueSet central_values_vkernel(const CharacterTable& table, double alpha, const VKernelOptions& opt) {
  if (table.modulus() > 2000) throw CapacityError("V-kernel oracle limited to q <= 2000");
  if (!(std::abs(alpha) < 0.5)) throw DomainError("V-kernel sum needs |alpha| < 1/2");
  auto set = empty_set(table, {0.5 + alpha, 0.0}, CentralMethod::VKernelSum);
  if (set.characters.empty()) return set;

  const double q = static_cast<double>(table.modulus());
  const auto uq = static_cast<std::size_t>(table.modulus());
  const double cutoff = std::pow(q, opt.cutoff_exponent);
  const double log_cutoff = std::log(cutoff);
  const auto m_max = static_cast<std::int64_t>(cutoff * std::exp(opt.truncation_log));

  const MellinKernel v{KernelSpec{}};
  const KernelTable v_table(v, -30.0, opt.truncation_log + 0.5);
  std::vector<CompensatedSum> folded(uq);
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const double lm = std::log(static_cast<double>(m));
    const double kv = v_table(std::exp(lm - log_cutoff));
    folded[static_cast<std::size_t>(m % table.modulus())].add(std::exp(-(0.5 + alpha) * lm) * kv);
  }
  std::vector<Complex> by_residue(uq);
  for (std::size_t a = 0; a < uq; ++a) by_residue[a] = folded[a].value();
  const auto direct = batch_twisted_sum_residues(by_residue, table);

  std::vector<Complex> dual(table.size(), Complex{});
  if (opt.include_dual) {
    // L = A + eps (q/pi)^{-alpha} sum_n conj(chi)(n) n^{-1/2+alpha} V~(n X pi / q).
    KernelSpec ds;
    ds.kind = KernelKind::VDual;
    ds.alpha = alpha;
    const MellinKernel vd(ds);
    const double base = std::log(cutoff * kPi / q);
    const double top = 12.0;
    const KernelTable vd_table(vd, std::min(base, top) - 0.5, top + 0.5);
    std::vector<double> coeffs;
    for (std::int64_t n = 1; base + std::log(static_cast<double>(n)) <= top; ++n) {
      const double ln = std::log(static_cast<double>(n));
      coeffs.push_back(std::exp((-0.5 + alpha) * ln) * vd_table(std::exp(base + ln)));
    }
    dual = batch_twisted_sum(coeffs, table);
  }
  const double dual_scale = std::pow(q / kPi, -alpha);
  for (std::size_t i = 0; i < set.characters.size(); ++i) {
    const auto chi = set.characters[i];
    const Complex corr = set.epsilon[i] * dual_scale * dual[table.conjugate(chi)];
    set.dual_correction = std::max(set.dual_correction, std::abs(corr));
    set.values.push_back(direct[chi] + corr);
  }
  return set;
}

CentralValueSet central_values_vkernel(std::int64_t q, double alpha, const VKernelOptions& opt) {
  if (q > 2000) throw CapacityError("V-kernel oracle limited to q <= 2000");
  return central_values_vkernel(enumerate_characters(q), alpha, opt);
}

std::complex<double> hurwitz_zeta(std::complex<double> s, double x) {
  using C = std::complex<double>;
  constexpr int kShift = 20;
  constexpr int kTerms = 12;
  C acc{};
  for (int k = 0; k < kShift; ++k) acc += std::exp(-s * std::log(x + k));
  const double big = x + kShift;
  const double lb = std::log(big);
  acc += std::exp((1.0 - s) * lb) / (s - 1.0);
  acc += 0.5 * std::exp(-s * lb);
  // B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * big^{-s-2j+1}
  C rising = s;
  C power = std::exp(-s * lb) / big;
  double fact = 2.0;
  for (int j = 1; j <= kTerms; ++j) {
    acc += boost::math::bernoulli_b2n<double>(j) / fact * rising * power;
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    power /= big * big;
    fact *= static_cast<double>((2 * j + 1) * (2 * j + 2));
  }
  return acc;
}

CentralValueSet central_values_hurwitz(const CharacterTable& table, std::complex<double> s) {
  if (table.modulus() > 2000) throw CapacityError("Hurwitz oracle limited to q <= 2000");
  if (s.real() < 0.25) throw DomainError("Hurwitz oracle needs Re s >= 1/4");
  auto set = empty_set(table, s, CentralMethod::Hurwitz);
  const std::int64_t q = table.modulus();
  std::vector<Complex> by_residue(static_cast<std::size_t>(q));
  for (std::int64_t a = 1; a < q; ++a) {
    if (table.log_index(a) < 0) continue;
    by_residue[static_cast<std::size_t>(a)] = hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
  }
  const auto sums = batch_twisted_sum_residues(by_residue, table);
  const Complex scale = std::exp(-s * std::log(static_cast<double>(q)));
  for (auto chi : set.characters) set.values.push_back(scale * sums[chi]);
  return set;
}

CentralValueSet central_values_hurwitz(std::int64_t q, std::complex<double> s) {
  if (q > 2000) throw CapacityError("Hurwitz oracle limited to q <= 2000");
  return central_values_hurwitz(enumerate_characters(q), s);
}

Complex pair_product_afe(const CharacterTable& table, std::size_t chi, double alpha, double beta) {
  const std::int64_t qi = table.modulus();
  if (qi > 500) throw CapacityError("pair-product oracle limited to q <= 500");
  const double q = static_cast<double>(qi);
  const auto k_max = static_cast<std::int64_t>(q / kPi * std::exp(10.0));

  KernelSpec plus;
  plus.kind = KernelKind::WPlus;
  plus.alpha = alpha;
  plus.beta = beta;
  KernelSpec minus = plus;
  minus.kind = KernelKind::WMinus;
  const double lo = std::log(kPi / q) - 0.5;
  const KernelTable wp(MellinKernel(plus), lo, 10.5);
  const KernelTable wm(MellinKernel(minus), lo, 10.5);

  const auto chi_v = character_values_by_residue(table, chi);
  std::vector<double> log_n(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (std::int64_t n = 1; n <= k_max; ++n) log_n[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));

  CompensatedSum plus_sum, minus_sum;
  for (std::int64_t m = 1; m <= k_max; ++m) {
    const Complex cm = chi_v[static_cast<std::size_t>(m % qi)];
    if (cm == Complex{}) continue;
    const double lm = log_n[static_cast<std::size_t>(m)];
    Complex row_plus{}, row_minus{};
    for (std::int64_t n = 1; m * n <= k_max; ++n) {
      const Complex cn = chi_v[static_cast<std::size_t>(n % qi)];
      if (cn == Complex{}) continue;
      const double ln = log_n[static_cast<std::size_t>(n)];
      const double x = kPi * static_cast<double>(m * n) / q;
      row_plus += std::conj(cn) * (std::exp(-(0.5 + alpha) * lm - (0.5 + beta) * ln) * wp(x));
      row_minus += cn * (std::exp(-(0.5 - alpha) * lm - (0.5 - beta) * ln) * wm(x));
    }
    plus_sum.add(cm * row_plus);
    minus_sum.add(std::conj(cm) * row_minus);
  }
  return plus_sum.value() + std::pow(q / kPi, -alpha - beta) * minus_sum.value();
}

double functional_equation_residual(const CentralValueSet& set, const CharacterTable& table) {
  double worst = 0.0;
  for (std::size_t i = 0; i < set.characters.size(); ++i) {
    const auto conj = table.conjugate(set.characters[i]);
    std::size_t j = 0;
    while (j < set.characters.size() && set.characters[j] != conj) ++j;
    if (j == set.characters.size()) throw DomainError("conjugate character missing from set");
    worst = std::max(worst, std::abs(set.values[i] - set.epsilon[i] * set.values[j]));
  }
  return worst;
}

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), 8);
  if (!in) throw DomainError("truncated central-value cache");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

}  // namespace

void write_cache(const std::filesystem::path& path, const CentralValueSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path.string());
  put_u64(out, static_cast<std::uint64_t>(set.q));
  put_u64(out, std::bit_cast<std::uint64_t>(set.alpha()));
  put_u64(out, static_cast<std::uint64_t>(set.method));
  put_u64(out, set.values.size());
  for (const auto& v : set.values) {
    put_u64(out, std::bit_cast<std::uint64_t>(v.real()));
    put_u64(out, std::bit_cast<std::uint64_t>(v.imag()));
  }
}

CentralValueSet read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  CentralValueSet set;
  set.q = static_cast<std::int64_t>(get_u64(in));
  set.s = {0.5 + std::bit_cast<double>(get_u64(in)), 0.0};
  const auto method = get_u64(in);
  if (method > 2) throw DomainError("unknown method tag in cache");
  set.method = static_cast<CentralMethod>(method);
  const auto count = get_u64(in);
  set.values.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double re = std::bit_cast<double>(get_u64(in));
    const double im = std::bit_cast<double>(get_u64(in));
    set.values.emplace_back(re, im);
  }
  return set;
}

}  // namespace mollify
