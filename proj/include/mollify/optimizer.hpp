#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mollify/mollifier.hpp"
#include "mollify/rational_poly.hpp"

namespace mollify {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// s1 and lambda as linear and quadratic forms in the coefficient vector
/// a = (P_1..P_dP, Q_1..Q_dQ), where P_i multiplies x^i.
struct QuadraticModel {
  int dP = 0;
  int dQ = 0;
  Rational theta1, theta2;
  std::vector<std::string> basis;  // "P:x^1", ..., "Q:x^dQ"
  std::vector<Rational> c;
  RationalMatrix M;

  std::size_t size() const { return c.size(); }
  MollifierSpec spec_for(const std::vector<Rational>& a) const;
  Rational linear(const std::vector<Rational>& a) const;
  Rational quadratic(const std::vector<Rational>& a) const;
};

QuadraticModel build_forms(int dP, int dQ, const Rational& theta1, const Rational& theta2);

/// Exact symmetric elimination with diagonal pivoting; false as soon as a
/// negative pivot (or a zero pivot with a nonzero off-diagonal) appears.
bool is_positive_semidefinite(const RationalMatrix& M);

struct LinearSolution {
  std::vector<Rational> x;
  std::size_t rank = 0;
};
/// Exact solution of the symmetric system M x = c; for singular M the
/// minimal-norm solution. Throws DegenerateError when c is outside the range.
LinearSolution solve_symmetric(const RationalMatrix& M, const std::vector<Rational>& c);

struct OptimizationResult {
  RationalPoly P, Q;
  std::vector<Rational> coefficients;  // solution of M a = c
  Rational proportion, lambda, s1;
  bool singular = false;
  std::string note;
};

/// Maximizes (c.a)^2 / (a^T M a). Throws DegenerateError when c = 0 or c is
/// outside the column space of a singular M.
OptimizationResult maximize_proportion(const QuadraticModel& model);

struct ScanRow {
  int dP, dQ;
  OptimizationResult result;
};

/// All degree pairs 1 <= dP <= maxdP, 0 <= dQ <= maxdQ.
std::vector<ScanRow> degree_scan(int maxdP, int maxdQ, const Rational& theta1, const Rational& theta2);

/// Columns dP, dQ, proportion_exact, proportion_decimal, coeffs.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace mollify
