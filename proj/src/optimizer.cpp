#include "mollify/optimizer.hpp"

#include <cstdio>
#include <algorithm>

#include "mollify/errors.hpp"
#include "mollify/moments.hpp"

namespace mollify {

namespace {

void canonical(Rational& r) { r.canonicalize(); }

// Solves A x = b exactly; free variables are set to zero. Returns false when
// the system is inconsistent. rank receives the rank of A.
bool solve_exact(RationalMatrix A, std::vector<Rational> b, std::vector<Rational>& x, std::size_t& rank) {
  const std::size_t n = A.size();
  const std::size_t m = n == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && sgn(A[p][col]) == 0) ++p;
    if (p == n) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || sgn(A[r][col]) == 0) continue;
      const Rational f = A[r][col] / A[row][col];
      for (std::size_t k = col; k < m; ++k) {
        A[r][k] -= f * A[row][k];
        canonical(A[r][k]);
      }
      b[r] -= f * b[row];
      canonical(b[r]);
    }
    pivot_col.push_back(col);
    ++row;
  }
  rank = row;
  for (std::size_t r = row; r < n; ++r)
    if (sgn(b[r]) != 0) return false;
  x.assign(m, Rational(0));
  for (std::size_t r = 0; r < row; ++r) {
    x[pivot_col[r]] = b[r] / A[r][pivot_col[r]];
    canonical(x[pivot_col[r]]);
  }
  return true;
}

RationalMatrix multiply(const RationalMatrix& A, const RationalMatrix& B) {
  const std::size_t n = A.size();
  RationalMatrix C(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(A[i][k]) != 0)
        for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
  for (auto& r : C)
    for (auto& v : r) canonical(v);
  return C;
}

std::string join_coeffs(const RationalPoly& p, int degree) {
  std::string s;
  for (int i = 1; i <= degree; ++i) {
    if (i > 1) s += ';';
    s += format_rational(p.coeff(i));
  }
  return s;
}

}  // namespace

MollifierSpec QuadraticModel::spec_for(const std::vector<Rational>& a) const {
  if (a.size() != size()) throw ValidationError("coefficient vector has the wrong length");
  std::vector<Rational> p(a.begin(), a.begin() + dP), q(a.begin() + dP, a.end());
  return MollifierSpec{theta1, theta2, RationalPoly::from_linear_up(p), RationalPoly::from_linear_up(q), {}};
}

Rational QuadraticModel::linear(const std::vector<Rational>& a) const {
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += c[i] * a[i];
  canonical(s);
  return s;
}

Rational QuadraticModel::quadratic(const std::vector<Rational>& a) const {
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) s += a[i] * M[i][j] * a[j];
  canonical(s);
  return s;
}

QuadraticModel build_forms(int dP, int dQ, const Rational& theta1, const Rational& theta2) {
  if (dP < 1 || dQ < 0) throw ValidationError("need dP >= 1 and dQ >= 0");
  QuadraticModel m;
  m.dP = dP;
  m.dQ = dQ;
  m.theta1 = theta1;
  m.theta2 = theta2;
  require_valid(MollifierSpec{theta1, theta2, {}, {}, {}});
  const auto n = static_cast<std::size_t>(dP + dQ);
  for (int i = 1; i <= dP; ++i) m.basis.push_back("P:x^" + std::to_string(i));
  for (int i = 1; i <= dQ; ++i) m.basis.push_back("Q:x^" + std::to_string(i));

  auto unit = [n](std::size_t i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    return e;
  };
  std::vector<Rational> diag(n);
  m.c.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = m.spec_for(unit(i));
    m.c[i] = s1_main(s);
    diag[i] = lambda_exact(s);
  }
  m.M.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m.M[i][i] = diag[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      auto e = unit(i);
      e[j] = 1;
      Rational v = (lambda_exact(m.spec_for(e)) - diag[i] - diag[j]) / 2;
      canonical(v);
      m.M[i][j] = m.M[j][i] = v;
    }
  }
  return m;
}

bool is_positive_semidefinite(const RationalMatrix& input) {
  RationalMatrix A = input;
  const std::size_t n = A.size();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (sgn(A[i][i]) < 0) return false;
      if (sgn(A[i][i]) > 0 && p == n) p = i;
    }
    if (p == n) {
      // every remaining diagonal entry is zero: PSD only if the block vanishes
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && sgn(A[i][j]) != 0) return false;
      return true;
    }
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(A[i][p]) == 0) continue;
      const Rational f = A[i][p] / A[p][p];
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        A[i][j] -= f * A[p][j];
        canonical(A[i][j]);
      }
    }
  }
  return true;
}

LinearSolution solve_symmetric(const RationalMatrix& M, const std::vector<Rational>& c) {
  LinearSolution out;
  if (!solve_exact(M, c, out.x, out.rank))
    throw DegenerateError("second-moment form is singular and does not reach the first-moment direction");
  if (out.rank == c.size()) return out;
  // the minimal-norm solution lies in the range of M: x = M y with M^2 y = c
  std::vector<Rational> y;
  std::size_t r2 = 0;
  solve_exact(multiply(M, M), c, y, r2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.x[i] = 0;
    for (std::size_t j = 0; j < c.size(); ++j) out.x[i] += M[i][j] * y[j];
    canonical(out.x[i]);
  }
  return out;
}

OptimizationResult maximize_proportion(const QuadraticModel& model) {
  if (std::all_of(model.c.begin(), model.c.end(), [](const Rational& r) { return sgn(r) == 0; }))
    throw DegenerateError("first moment vanishes identically on this basis");
  OptimizationResult out;
  const auto sol = solve_symmetric(model.M, model.c);
  out.coefficients = sol.x;
  if (sol.rank < model.size()) {
    out.singular = true;
    out.note = "second-moment form has rank " + std::to_string(sol.rank) + " of " + std::to_string(model.size()) +
               "; minimal-norm solution returned";
  } else {
    out.note = "solution normalized so that s1 = lambda; any rescaling gives the same proportion";
  }
  const auto spec = model.spec_for(out.coefficients);
  out.P = spec.P;
  out.Q = spec.Q;
  out.s1 = s1_main(spec);
  out.lambda = lambda_exact(spec);
  out.proportion = proportion(spec);
  return out;
}

std::vector<ScanRow> degree_scan(int maxdP, int maxdQ, const Rational& theta1, const Rational& theta2) {
  if (maxdP < 1 || maxdQ < 0 || maxdP > 12 || maxdQ > 12) throw ValidationError("degree scan needs 1 <= dP <= 12 and 0 <= dQ <= 12");
  std::vector<ScanRow> rows;
  for (int dP = 1; dP <= maxdP; ++dP)
    for (int dQ = 0; dQ <= maxdQ; ++dQ) rows.push_back({dP, dQ, maximize_proportion(build_forms(dP, dQ, theta1, theta2))});
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "dP,dQ,proportion_exact,proportion_decimal,coeffs\n";
  for (const auto& r : rows) {
    char dec[64];
    std::snprintf(dec, sizeof dec, "%.12f", to_double(r.result.proportion));
    out << r.dP << ',' << r.dQ << ',' << format_rational(r.result.proportion) << ',' << dec << ",\"P=" << join_coeffs(r.result.P, r.dP)
        << " Q=" << join_coeffs(r.result.Q, r.dQ) << "\"\n";
  }
}

}  // namespace mollify
