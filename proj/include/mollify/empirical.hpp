#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "mollify/central_values.hpp"
#include "mollify/characters.hpp"
#include "mollify/mollifier.hpp"

namespace mollify {

/// psi_1 and psi_2 for every even primitive character, in the order of
/// CharacterTable::even_primitive().
struct MollifierValues {
  std::int64_t q = 0;
  MollifierSpec spec;
  std::vector<std::size_t> characters;
  std::vector<Complex> psi1, psi2;
  std::int64_t y1 = 0, y2 = 0;  // realized integer lengths floor(q^theta)

  std::vector<Complex> psi() const;
};

/// Profile arguments use the real lengths: P[m] = P(1 - log m / (theta1 log q)).
MollifierValues mollifier_values(const CharacterTable& table, const MollifierSpec& spec);
MollifierValues mollifier_values(std::int64_t q, const MollifierSpec& spec);
/// Direct per-character loops; the oracle for the batched version.
MollifierValues mollifier_values_naive(const CharacterTable& table, const MollifierSpec& spec);

struct CensusRecord {
  std::int64_t q = 0;
  std::size_t total_even_primitive = 0;
  std::size_t nonzero_count = 0;
  double threshold = 0;
  double min_abs_L = 0;
  double s1_emp = 0, s1_pred = 0, s2_emp = 0, s2_pred = 0;
  double dev1 = 0, dev2 = 0;            // |emp - pred| / |pred| (absolute when pred = 0)
  double p1_scale = 1;                  // P(1); divides s1 and s2 (squared) for the normalized view
  bool has_moments = false;
};

/// Empirical S1, S2 of psi = psi1 + psi2 normalized by phi^+(q), with the
/// main-term predictions. Values must be at alpha = 0 for the same q.
CensusRecord empirical_moments(const MollifierValues& mollifier, const CentralValueSet& values);

/// Counts characters with |L(1/2, chi)| above threshold.
CensusRecord nonvanishing_census(const CentralValueSet& values, double threshold = 1e-8);

/// q, total, nonzero, min_abs_L, s1_emp, s1_pred, s2_emp, s2_pred, dev1, dev2.
void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& rows);

/// (sum over even primitive chi of L(1/2+alpha, chi) conj(chi)(h) chi(k),
///  diagonal main term phi^+(q) sum_{mk=h} m^{-1/2-alpha} V(m / q^1.1)).
std::pair<Complex, double> oracle_lemma33(std::int64_t h, std::int64_t k, const CharacterTable& table,
                                          const CentralValueSet& values);
std::pair<Complex, double> oracle_lemma33(std::int64_t h, std::int64_t k, std::int64_t q, double alpha);

/// sum over hk <= y, gcd(hk, q) = 1 of |A(h,k) - main| / sqrt(hk).
double lemma33_offdiagonal_mass(std::int64_t y, std::int64_t q, double alpha);

/// (divisor-weighted sum over n <= y2, main term of the asymptotic); F1, F2
/// are arbitrary polynomial profiles.
std::pair<double, double> oracle_lemma36(int k, double z, const RationalPoly& F1, const RationalPoly& F2, double y1,
                                         double y2);

/// (sum_{n <= y} d_k(n)/n (y/n)^sigma, C (log y)^{k-1} min(1/|sigma|, log y)) with
/// C = H(y) / log y, the k = 1, sigma = 0 ratio.
std::pair<double, double> oracle_lemma37(int k, double sigma, double y);

}  // namespace mollify
