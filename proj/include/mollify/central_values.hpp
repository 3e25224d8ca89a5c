#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "mollify/characters.hpp"

namespace mollify {

enum class CentralMethod : std::uint64_t { SmoothedAfe = 0, VKernelSum = 1, Hurwitz = 2 };

/// L(1/2 + alpha, chi) for every even primitive chi mod q.
struct CentralValueSet {
  std::int64_t q = 0;
  std::complex<double> s{0.5, 0.0};  // evaluation point, 1/2 + alpha for real shifts
  CentralMethod method = CentralMethod::SmoothedAfe;
  std::vector<std::size_t> characters;  // indices into the CharacterTable
  std::vector<Complex> values;
  std::vector<Complex> epsilon;  // root numbers tau(chi)/sqrt(q)
  /// VKernelSum only: largest |dual correction| added to the one-sided sum.
  double dual_correction = 0.0;

  double alpha() const { return s.real() - 0.5; }
  std::size_t size() const { return values.size(); }
};

/// Root numbers of all even primitive characters via one batched Gauss sum.
std::vector<Complex> root_numbers(const CharacterTable& table, const std::vector<std::size_t>& chars);

/// Symmetric smoothed functional equation with the normalized upper
/// incomplete gamma kernel of Gamma(s/2). Requires |alpha| < 1/2.
CentralValueSet central_values_smoothed(const CharacterTable& table, double alpha);
CentralValueSet central_values_smoothed(std::int64_t q, double alpha);

struct VKernelOptions {
  double cutoff_exponent = 1.1;  // X = q^{cutoff_exponent}
  double truncation_log = 10.0;  // sum over m <= X e^{truncation_log}
  /// Add the dual-side remainder of the one-sided sum (the contour shifted
  /// past s = 0 and reflected by the functional equation). Without it the
  /// representation is only asymptotic in q.
  bool include_dual = true;
};

/// sum_m chi(m) m^{-1/2-alpha} V(m / X), X = q^{1.1}. Capacity cap q <= 2000.
CentralValueSet central_values_vkernel(const CharacterTable& table, double alpha, const VKernelOptions& opt = {});
CentralValueSet central_values_vkernel(std::int64_t q, double alpha, const VKernelOptions& opt = {});

/// Reference values L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q). q <= 2000, Re s >= 1/4.
CentralValueSet central_values_hurwitz(const CharacterTable& table, std::complex<double> s);
CentralValueSet central_values_hurwitz(std::int64_t q, std::complex<double> s);

/// Hurwitz zeta by Euler-Maclaurin, |error| < 1e-13 for 0 < x <= 1, Re s >= 1/4, s != 1.
std::complex<double> hurwitz_zeta(std::complex<double> s, double x);

/// L(1/2 + alpha, chi) L(1/2 + beta, conj chi) from the two W-kernel double
/// sums, truncated at mn <= (q / pi) e^{10}. q <= 500, |alpha|, |beta| < 1/4.
Complex pair_product_afe(const CharacterTable& table, std::size_t chi, double alpha, double beta);

/// max over the set of |L(chi) - epsilon_chi L(conj chi)|; meaningful at alpha = 0.
double functional_equation_residual(const CentralValueSet& set, const CharacterTable& table);

/// Binary cache: little-endian u64 q, f64 alpha, u64 method, u64 count, then
/// count pairs of f64 (re, im).
void write_cache(const std::filesystem::path& path, const CentralValueSet& set);
CentralValueSet read_cache(const std::filesystem::path& path);

}  // namespace mollify
