#include "mollify/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "mollify/errors.hpp"

namespace mollify {

std::int64_t max_sieve_length() {
  if (const char* env = std::getenv("MOLLIFY_MAX_SIEVE")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 50'000'000;
}

ArithTables build_tables(std::int64_t limit) {
  if (limit < 1 || limit > max_sieve_length()) {
    throw CapacityError("sieve length " + std::to_string(limit) +
                        " outside [1, " + std::to_string(max_sieve_length()) + "]");
  }
  const auto n = static_cast<std::size_t>(limit);
  ArithTables t;
  t.limit = limit;
  t.mobius.assign(n + 1, 0);
  t.vonmangoldt.assign(n + 1, 0.0);
  t.totient.assign(n + 1, 0);
  t.smallest_prime_factor.assign(n + 1, 0);
  t.mobius[1] = 1;
  t.totient[1] = 1;
  t.smallest_prime_factor[1] = 1;

  std::vector<std::int32_t> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (t.smallest_prime_factor[i] == 0) {
      t.smallest_prime_factor[i] = static_cast<std::int32_t>(i);
      t.mobius[i] = -1;
      t.totient[i] = static_cast<std::int64_t>(i) - 1;
      t.vonmangoldt[i] = std::log(static_cast<double>(i));
      primes.push_back(static_cast<std::int32_t>(i));
    }
    const std::int32_t spf = t.smallest_prime_factor[i];
    for (const std::int32_t p : primes) {
      const std::size_t ip = i * static_cast<std::size_t>(p);
      if (p > spf || ip > n) break;
      t.smallest_prime_factor[ip] = p;
      if (p == spf) {
        t.mobius[ip] = 0;
        t.totient[ip] = t.totient[i] * p;
        // i is a power of p exactly when Lambda(i) is nonzero.
        t.vonmangoldt[ip] = t.vonmangoldt[i];
      } else {
        t.mobius[ip] = static_cast<std::int8_t>(-t.mobius[i]);
        t.totient[ip] = t.totient[i] * (p - 1);
      }
    }
  }
  return t;
}

std::vector<std::int64_t> divisor_dk(std::int64_t limit, int k) {
  if (k < 1 || k > 4) {
    throw DomainError("divisor_dk supports 1 <= k <= 4, got " + std::to_string(k));
  }
  if (limit < 1 || limit > max_sieve_length()) {
    throw CapacityError("divisor table length " + std::to_string(limit) + " out of range");
  }
  const auto n = static_cast<std::size_t>(limit);
  std::vector<std::int64_t> cur(n + 1, 1);
  cur[0] = 0;
  for (int level = 2; level <= k; ++level) {
    std::vector<std::int64_t> next(n + 1, 0);
    for (std::size_t d = 1; d <= n; ++d) {
      const std::int64_t v = cur[d];
      for (std::size_t m = d; m <= n; m += d) next[m] += v;
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = ds.size();
    std::int64_t pk = 1;
    for (int j = 1; j <= e; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

int mobius_of(std::int64_t n) {
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t phi_star(std::int64_t q) {
  if (q < 1) throw DomainError("phi_star requires q >= 1");
  std::int64_t total = 0;
  for (const std::int64_t d : divisors(q)) {
    total += mobius_of(d) * euler_phi(q / d);
  }
  return total;
}

mpq_class phi_plus(std::int64_t q) {
  mpq_class r(static_cast<long>(phi_star(q)), 2);
  r.canonicalize();
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  using u128 = unsigned __int128;
  std::int64_t result = 1 % mod;
  std::int64_t b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>(static_cast<u128>(result) * b % mod);
    b = static_cast<std::int64_t>(static_cast<u128>(b) * b % mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t mod) {
  std::int64_t old_r = ((a % mod) + mod) % mod, r = mod;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw DomainError("no inverse mod " + std::to_string(mod));
  return ((old_s % mod) + mod) % mod;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace mollify
