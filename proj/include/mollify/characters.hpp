#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mollify/rational_poly.hpp"

namespace mollify {

using Complex = std::complex<double>;

/// Largest modulus accepted by enumerate_characters; MOLLIFY_MAX_Q overrides.
std::int64_t max_modulus();

struct UnitGenerator {
  std::int64_t residue;  // generator of one cyclic factor, lifted mod q by CRT
  std::int64_t order;
};

/// The full group of Dirichlet characters mod q. A character is labeled by an
/// exponent vector (e_1, ..., e_r) over the cyclic factors of (Z/qZ)^*, and
/// chi(a) = exp(2 pi i sum_j e_j ind_j(a) / order_j). Characters are stored in
/// row-major (lexicographic) label order; index 0 is the principal character.
class CharacterTable {
 public:
  std::int64_t modulus() const { return q_; }
  const std::vector<UnitGenerator>& generators() const { return gens_; }
  std::size_t size() const { return labels_.size(); }
  /// Exponent of the group: every value is a power of exp(2 pi i / root_order()).
  std::int64_t root_order() const { return root_order_; }

  const std::vector<std::int64_t>& label(std::size_t chi) const { return labels_[chi]; }
  bool is_even(std::size_t chi) const { return even_[chi]; }
  bool is_primitive(std::size_t chi) const { return conductor_[chi] == q_; }
  std::int64_t conductor(std::size_t chi) const { return conductor_[chi]; }
  std::size_t conjugate(std::size_t chi) const { return conj_[chi]; }

  /// k with chi(a) = exp(2 pi i k / root_order()), or -1 when gcd(a, q) > 1.
  std::int64_t value_exponent(std::size_t chi, std::int64_t a) const;
  Complex value(std::size_t chi, std::int64_t a) const;

  /// Row-major position of the discrete-log vector of a, or -1 if gcd(a, q) > 1.
  std::int64_t log_index(std::int64_t a) const { return log_index_[static_cast<std::size_t>(a % q_)]; }
  const std::vector<std::int64_t>& dims() const { return dims_; }

  /// Indices of the even primitive characters, in table order.
  std::vector<std::size_t> even_primitive() const;

  friend CharacterTable enumerate_characters(std::int64_t q);

 private:
  std::int64_t q_ = 0;
  std::int64_t root_order_ = 1;
  std::vector<UnitGenerator> gens_;
  std::vector<std::int64_t> dims_;
  std::vector<std::vector<std::int64_t>> labels_;
  std::vector<bool> even_;
  std::vector<std::int64_t> conductor_;
  std::vector<std::size_t> conj_;
  std::vector<std::int64_t> log_index_;
  std::vector<std::int32_t> dlog_;  // q_ * gens_.size(), row per residue
};

/// Throws DomainError for q < 3 and CapacityError above max_modulus().
CharacterTable enumerate_characters(std::int64_t q);

/// For every character chi in the table, sum_{m} coeffs[m-1] chi(m). Terms with
/// gcd(m, q) > 1 drop out. Coefficients are folded onto discrete logarithms and
/// transformed by one multi-dimensional DFT (length q-1 for prime q).
std::vector<Complex> batch_twisted_sum(std::span<const Complex> coeffs, const CharacterTable& table);
std::vector<Complex> batch_twisted_sum(std::span<const double> coeffs, const CharacterTable& table);

/// Same contract, with coefficients already reduced mod q: by_residue[a] for
/// 0 <= a < q.
std::vector<Complex> batch_twisted_sum_residues(std::span<const Complex> by_residue,
                                                const CharacterTable& table);

/// Direct double loop; the oracle for the batch engine.
std::vector<Complex> naive_twisted_sum(std::span<const Complex> coeffs, const CharacterTable& table);

struct GaussData {
  Complex tau;
  Complex epsilon;
};

/// Gauss sum and root number of an even primitive character.
GaussData gauss_root(std::size_t chi, const CharacterTable& table);

/// Closed form of the sum over even primitive characters of chi(m) conj(chi)(n):
/// (1/2) sum_{q = d r} mu(d) phi(r) ([r | m - n] + [r | m + n]). Both indicators
/// count when both divisibilities hold. Requires gcd(mn, q) = 1.
Rational even_orthogonality_rhs(std::int64_t m, std::int64_t n, std::int64_t q);

/// Brute-force sum over even primitive characters of chi(m) conj(chi)(n),
/// computed exactly in Z[zeta_N] (N = root_order) and reduced modulo the
/// cyclotomic polynomial. Throws if the result is not a rational integer.
std::int64_t even_primitive_pair_sum_exact(std::int64_t m, std::int64_t n, const CharacterTable& table);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

}  // namespace mollify
