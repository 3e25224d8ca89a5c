#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mollify/mollifier.hpp"
#include "mollify/rational_poly.hpp"

namespace mollify {

/// First-moment main term P(1) + (theta2/2) Q1(1).
Rational s1_main(const MollifierSpec& spec);

/// The nine summands of the second-moment main term, in the order
/// P(1)^2, (1/theta1) int P'^2, -theta2 P(1) Q1(1), 2 theta2 int P(X) Q,
/// (theta2/theta1) int P'(X) Q, theta2^2 int (1-x) Q^2, (theta2/2) int (1-x)^2 Q'^2,
/// -(theta2^2/4) Q1(1)^2, (theta2/4) int Q^2, where X = 1 - theta2 (1-x) / theta1.
std::array<Rational, 9> lambda_terms(const MollifierSpec& spec);
Rational lambda_exact(const MollifierSpec& spec);

/// s1_main^2 / lambda; throws DegenerateError when lambda = 0.
Rational proportion(const MollifierSpec& spec);

struct CorollaryTerms {
  Rational cor21;  // first psi_2 moment
  Rational cor22;  // cross term with psi_1
  Rational cor23;  // |psi_2|^2 term
};
CorollaryTerms corollary_terms(const MollifierSpec& spec);

struct BaselineMoments {
  Rational first;
  Rational second;
};
/// Moments of the single-piece mollifier with profile P and length q^theta1.
BaselineMoments is_baseline(const RationalPoly& P, const Rational& theta1);

/// theta2 int_0^1 exp(-c (1-x)) Q(x) dx - (theta2/2) Q1(1) with c = alpha log y2.
double shifted_I(const MollifierSpec& spec, double alpha_logy2);

/// int_0^1 x^j exp(-c (1-x)) dx for j = 0..max_j.
std::vector<double> exp_poly_moments(int max_j, double c);

/// (log z) int_0^1 z^{-s t} dt by Gauss-Legendre in t; exact value is (1 - z^{-s}) / s.
double t_integral_log(double z, double s, int nodes = 32);

struct ShiftedOptions {
  int nodes = 64;            // per axis for one- and two-dimensional integrals
  int nodes_high_dim = 32;   // per axis for three- and four-dimensional integrals
  bool check_refinement = true;
  double refinement_tol = 1e-8;
};

struct ShiftedMomentResult {
  double value = 0;
  double alpha = 0;
  double beta = 0;
  std::string method;  // "jet" or "finite-difference"
  int nodes = 0;
  int nodes_high_dim = 0;
  double refinement_change = 0;  // |value(2n) - value(n)| when checked
};

/// Main terms of J1(alpha, beta) / phi^+(q) and J2(alpha, beta) / phi^+(q).
/// Throws DomainError for |alpha| or |beta| above 10 / log q, AccuracyError
/// when doubling the node counts moves the value by more than refinement_tol.
ShiftedMomentResult shifted_J1(const MollifierSpec& spec, std::int64_t q, double alpha, double beta,
                               const ShiftedOptions& opt = {});
ShiftedMomentResult shifted_J2(const MollifierSpec& spec, std::int64_t q, double alpha, double beta,
                               const ShiftedOptions& opt = {});

/// Same quantities with d^2/da db replaced by Richardson-extrapolated central
/// differences of step h; an independent check on the jet arithmetic.
ShiftedMomentResult shifted_J1_fd(const MollifierSpec& spec, std::int64_t q, double alpha, double beta,
                                  double h = 1e-3, const ShiftedOptions& opt = {});
ShiftedMomentResult shifted_J2_fd(const MollifierSpec& spec, std::int64_t q, double alpha, double beta,
                                  double h = 1e-3, const ShiftedOptions& opt = {});

}  // namespace mollify
