#include "mollify/characters.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "mollify/arith.hpp"
#include "mollify/errors.hpp"

namespace mollify {

std::int64_t max_modulus() {
  if (const char* env = std::getenv("MOLLIFY_MAX_Q")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 100'000;
}

namespace {

// One prime-power factor p^e of q with its cyclic generators and discrete logs.
struct LocalFactor {
  std::int64_t p = 0;
  int e = 0;
  std::int64_t pe = 1;
  std::vector<std::int64_t> gens;    // mod pe
  std::vector<std::int64_t> orders;
  std::vector<std::int32_t> logs;    // pe * gens.size(), -1 if p | a
};

std::int64_t primitive_root_mod_prime(std::int64_t p) {
  if (p == 2) return 1;
  const auto fac = factorize(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& f : fac) {
      if (powmod(g, (p - 1) / f.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw DomainError("no primitive root mod " + std::to_string(p));
}

LocalFactor make_local(std::int64_t p, int e) {
  LocalFactor f;
  f.p = p;
  f.e = e;
  for (int i = 0; i < e; ++i) f.pe *= p;
  const auto pe = static_cast<std::size_t>(f.pe);
  if (p == 2) {
    if (e == 1) return f;
    if (e == 2) {
      f.gens = {3};
      f.orders = {2};
      f.logs.assign(pe, -1);
      f.logs[1] = 0;
      f.logs[3] = 1;
      return f;
    }
    const std::int64_t half = f.pe / 4;
    f.gens = {f.pe - 1, 5};
    f.orders = {2, half};
    f.logs.assign(pe * 2, -1);
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < half; ++k) {
      const auto pos = static_cast<std::size_t>(x);
      const auto neg = static_cast<std::size_t>(f.pe - x);
      f.logs[pos * 2] = 0;
      f.logs[pos * 2 + 1] = static_cast<std::int32_t>(k);
      f.logs[neg * 2] = 1;
      f.logs[neg * 2 + 1] = static_cast<std::int32_t>(k);
      x = x * 5 % f.pe;
    }
    return f;
  }
  std::int64_t g = primitive_root_mod_prime(p);
  if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
  const std::int64_t order = f.pe / p * (p - 1);
  f.gens = {g % f.pe};
  f.orders = {order};
  f.logs.assign(pe, -1);
  std::int64_t x = 1;
  for (std::int64_t k = 0; k < order; ++k) {
    f.logs[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k);
    x = x * g % f.pe;
  }
  return f;
}

// Conductor of the local component with exponents `ex` (one per local generator).
std::int64_t local_conductor(const LocalFactor& f, std::span<const std::int64_t> ex) {
  if (f.gens.empty()) return 1;
  if (f.p == 2) {
    if (f.e == 2) return ex[0] == 0 ? 1 : 4;
    const std::int64_t k = ex[1];
    if (k == 0) return ex[0] == 0 ? 1 : 4;
    const std::int64_t ord = f.orders[1];
    std::int64_t cond = 8;
    for (std::int64_t step = 2; (k * step) % ord != 0; step *= 2) cond *= 2;
    return cond;
  }
  const std::int64_t x = ex[0];
  if (x == 0) return 1;
  const std::int64_t ord = f.orders[0];
  std::int64_t pf = f.p;
  std::int64_t phi_pf = f.p - 1;
  while ((x % ord) * phi_pf % ord != 0) {
    pf *= f.p;
    phi_pf *= f.p;
  }
  return pf;
}

std::int64_t crt_lift(std::int64_t g, std::int64_t pe, std::int64_t q) {
  const std::int64_t rest = q / pe;
  if (rest == 1) return g % q;
  using i128 = __int128;
  const i128 a = static_cast<i128>(g) * rest % q * invmod(rest % pe, pe) % q;
  const i128 b = static_cast<i128>(pe) * invmod(pe % rest, rest) % q;
  return static_cast<std::int64_t>((a + b) % q);
}

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

CharacterTable enumerate_characters(std::int64_t q) {
  if (q < 3) throw DomainError("modulus must be >= 3 (no even primitive characters below), got " + std::to_string(q));
  if (q > max_modulus()) throw CapacityError("modulus " + std::to_string(q) + " above cap " + std::to_string(max_modulus()));

  CharacterTable t;
  t.q_ = q;
  std::vector<LocalFactor> locals;
  for (const auto& pp : factorize(q)) locals.push_back(make_local(pp.prime, pp.exponent));

  for (const auto& f : locals) {
    for (std::size_t j = 0; j < f.gens.size(); ++j) {
      t.gens_.push_back({crt_lift(f.gens[j], f.pe, q), f.orders[j]});
      t.dims_.push_back(f.orders[j]);
      t.root_order_ = std::lcm(t.root_order_, f.orders[j]);
    }
  }
  const std::size_t r = t.gens_.size();

  std::vector<std::int64_t> strides(r, 1);
  for (std::size_t j = r; j-- > 1;) strides[j - 1] = strides[j] * t.dims_[j];
  std::int64_t group_order = 1;
  for (auto d : t.dims_) group_order *= d;

  const auto uq = static_cast<std::size_t>(q);
  t.dlog_.assign(uq * r, -1);
  t.log_index_.assign(uq, -1);
  for (std::int64_t a = 1; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    std::size_t col = 0;
    std::int64_t flat = 0;
    for (const auto& f : locals) {
      const auto local = static_cast<std::size_t>(a % f.pe);
      for (std::size_t j = 0; j < f.gens.size(); ++j, ++col) {
        const std::int32_t l = f.logs[local * f.gens.size() + j];
        t.dlog_[static_cast<std::size_t>(a) * r + col] = l;
        flat += l * strides[col];
      }
    }
    t.log_index_[static_cast<std::size_t>(a)] = flat;
  }

  t.labels_.resize(static_cast<std::size_t>(group_order));
  t.even_.resize(t.labels_.size());
  t.conductor_.resize(t.labels_.size());
  t.conj_.resize(t.labels_.size());
  for (std::int64_t idx = 0; idx < group_order; ++idx) {
    std::vector<std::int64_t> ex(r);
    std::int64_t rem = idx;
    for (std::size_t j = 0; j < r; ++j) {
      ex[j] = rem / strides[j];
      rem %= strides[j];
    }
    std::int64_t conj_flat = 0;
    for (std::size_t j = 0; j < r; ++j) conj_flat += ((t.dims_[j] - ex[j]) % t.dims_[j]) * strides[j];
    std::int64_t cond = 1;
    std::size_t col = 0;
    for (const auto& f : locals) {
      cond *= local_conductor(f, std::span<const std::int64_t>(ex).subspan(col, f.gens.size()));
      col += f.gens.size();
    }
    const auto i = static_cast<std::size_t>(idx);
    t.labels_[i] = std::move(ex);
    t.conductor_[i] = cond;
    t.conj_[i] = static_cast<std::size_t>(conj_flat);
  }
  for (std::size_t i = 0; i < t.labels_.size(); ++i) t.even_[i] = t.value_exponent(i, q - 1) == 0;
  return t;
}

std::int64_t CharacterTable::value_exponent(std::size_t chi, std::int64_t a) const {
  a %= q_;
  if (a < 0) a += q_;
  if (log_index_[static_cast<std::size_t>(a)] < 0) return -1;
  const auto& ex = labels_[chi];
  const std::size_t r = gens_.size();
  std::int64_t k = 0;
  for (std::size_t j = 0; j < r; ++j) {
    const std::int64_t l = dlog_[static_cast<std::size_t>(a) * r + j];
    k = (k + (ex[j] * l % dims_[j]) * (root_order_ / dims_[j])) % root_order_;
  }
  return k;
}

Complex CharacterTable::value(std::size_t chi, std::int64_t a) const {
  const std::int64_t k = value_exponent(chi, a);
  if (k < 0) return {0.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(root_order_));
}

std::vector<std::size_t> CharacterTable::even_primitive() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (even_[i] && conductor_[i] == q_) out.push_back(i);
  }
  return out;
}

std::vector<Complex> batch_twisted_sum_residues(std::span<const Complex> by_residue, const CharacterTable& table) {
  const std::int64_t q = table.modulus();
  const std::size_t n = table.size();
  std::vector<Complex> folded(n, Complex{});
  for (std::int64_t a = 1; a < q && a < static_cast<std::int64_t>(by_residue.size()); ++a) {
    const std::int64_t idx = table.log_index(a);
    if (idx >= 0) folded[static_cast<std::size_t>(idx)] += by_residue[static_cast<std::size_t>(a)];
  }
  std::vector<Complex> out(n);
  const auto& dims = table.dims();
  std::vector<int> fdims(dims.begin(), dims.end());
  auto* in = reinterpret_cast<fftw_complex*>(folded.data());
  auto* res = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(fdims.size()), fdims.data(), in, res, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<Complex> batch_twisted_sum(std::span<const Complex> coeffs, const CharacterTable& table) {
  const auto q = static_cast<std::size_t>(table.modulus());
  std::vector<Complex> by_residue(q, Complex{});
  for (std::size_t i = 0; i < coeffs.size(); ++i) by_residue[(i + 1) % q] += coeffs[i];
  return batch_twisted_sum_residues(by_residue, table);
}

std::vector<Complex> batch_twisted_sum(std::span<const double> coeffs, const CharacterTable& table) {
  const auto q = static_cast<std::size_t>(table.modulus());
  std::vector<Complex> by_residue(q, Complex{});
  for (std::size_t i = 0; i < coeffs.size(); ++i) by_residue[(i + 1) % q] += coeffs[i];
  return batch_twisted_sum_residues(by_residue, table);
}

std::vector<Complex> naive_twisted_sum(std::span<const Complex> coeffs, const CharacterTable& table) {
  std::vector<Complex> out(table.size());
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    Complex acc{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      acc += coeffs[i] * table.value(chi, static_cast<std::int64_t>(i + 1));
    }
    out[chi] = acc;
  }
  return out;
}

GaussData gauss_root(std::size_t chi, const CharacterTable& table) {
  if (!table.is_primitive(chi) || !table.is_even(chi)) {
    throw DomainError("gauss_root requires an even primitive character");
  }
  const std::int64_t q = table.modulus();
  Complex tau{};
  for (std::int64_t a = 1; a < q; ++a) {
    const std::int64_t k = table.value_exponent(chi, a);
    if (k < 0) continue;
    const double phase = 2.0 * std::numbers::pi *
                         (static_cast<double>(k) / static_cast<double>(table.root_order()) +
                          static_cast<double>(a) / static_cast<double>(q));
    tau += std::polar(1.0, phase);
  }
  return {tau, tau / std::sqrt(static_cast<double>(q))};
}

Rational even_orthogonality_rhs(std::int64_t m, std::int64_t n, std::int64_t q) {
  if (std::gcd(m * n, q) != 1) throw DomainError("even_orthogonality_rhs requires gcd(mn, q) = 1");
  std::int64_t twice = 0;
  for (const std::int64_t r : divisors(q)) {
    const int mu = mobius_of(q / r);
    if (mu == 0) continue;
    const int hits = static_cast<int>((m - n) % r == 0) + static_cast<int>((m + n) % r == 0);
    twice += mu * euler_phi(r) * hits;
  }
  Rational out(static_cast<long>(twice), 2);
  out.canonicalize();
  return out;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num.back() = 1;
  for (const std::int64_t d : divisors(n)) {
    if (d == n) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mu);
  cache.emplace(n, num);
  return num;
}

std::int64_t even_primitive_pair_sum_exact(std::int64_t m, std::int64_t n, const CharacterTable& table) {
  const std::int64_t q = table.modulus();
  if (std::gcd(m * n, q) != 1) throw DomainError("pair sum requires gcd(mn, q) = 1");
  const std::int64_t big_n = table.root_order();
  std::vector<std::int64_t> poly(static_cast<std::size_t>(big_n), 0);
  for (const std::size_t chi : table.even_primitive()) {
    const std::int64_t k = (table.value_exponent(chi, m) - table.value_exponent(chi, n) + big_n) % big_n;
    poly[static_cast<std::size_t>(k)] += 1;
  }
  const auto phi = cyclotomic_polynomial(big_n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const std::int64_t c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 1; i < std::min(deg, poly.size()); ++i) {
    if (poly[i] != 0) throw DomainError("character sum is not a rational integer");
  }
  return poly[0];
}

}  // namespace mollify
