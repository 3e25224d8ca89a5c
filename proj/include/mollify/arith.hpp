#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace mollify {

/// Sieved multiplicative-function tables on 1..limit. Index 0 is unused.
struct ArithTables {
  std::int64_t limit = 0;
  std::vector<std::int8_t> mobius;
  std::vector<double> vonmangoldt;  // natural log
  std::vector<std::int64_t> totient;
  std::vector<std::int32_t> smallest_prime_factor;
};

/// Upper bound on the sieve length; MOLLIFY_MAX_SIEVE overrides the default.
std::int64_t max_sieve_length();

/// Linear sieve producing mu, Lambda, phi and the smallest prime factor in one
/// pass. Throws CapacityError for limit < 1 or limit > max_sieve_length().
ArithTables build_tables(std::int64_t limit);

/// d_k(n) for 1 <= n <= limit, 1 <= k <= 4 (index 0 unused).
std::vector<std::int64_t> divisor_dk(std::int64_t limit, int k);

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

std::vector<PrimePower> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int mobius_of(std::int64_t n);

/// Number of primitive characters mod q: sum over q = d r of mu(d) phi(r).
std::int64_t phi_star(std::int64_t q);

/// phi_star(q) / 2, exact.
mpq_class phi_plus(std::int64_t q);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t invmod(std::int64_t a, std::int64_t mod);
bool is_prime(std::int64_t n);

}  // namespace mollify
