#include "mollify/moments.hpp"

#include <cmath>
#include <vector>

#include "mollify/errors.hpp"
#include "mollify/jet.hpp"
#include "mollify/quadrature.hpp"

namespace mollify {

namespace {

struct Pieces {
  Rational t1, t2, r;
  RationalPoly P, dP, Q, dQ, Q1, PX, dPX;
  Rational P1, Q1one;
};

Pieces pieces(const MollifierSpec& spec) {
  require_valid(spec);
  Pieces p;
  p.t1 = spec.theta1;
  p.t2 = spec.theta2;
  p.r = spec.theta2 / spec.theta1;
  p.P = spec.P;
  p.dP = spec.P.derivative();
  p.Q = spec.Q;
  p.dQ = spec.Q.derivative();
  p.Q1 = antiderivative(spec.Q);
  p.PX = affine_compose(p.P, p.r, 1 - p.r);
  p.dPX = affine_compose(p.dP, p.r, 1 - p.r);
  p.P1 = p.P(Rational(1));
  p.Q1one = p.Q1(Rational(1));
  return p;
}

const RationalPoly kOneMinusX{1, -1};

}  // namespace

Rational s1_main(const MollifierSpec& spec) {
  const auto p = pieces(spec);
  Rational r = p.P1 + p.t2 / 2 * p.Q1one;
  r.canonicalize();
  return r;
}

std::array<Rational, 9> lambda_terms(const MollifierSpec& spec) {
  const auto p = pieces(spec);
  std::array<Rational, 9> t{
      p.P1 * p.P1,
      integrate_unit(p.dP * p.dP) / p.t1,
      -p.t2 * p.P1 * p.Q1one,
      2 * p.t2 * integrate_unit(p.PX * p.Q),
      p.r * integrate_unit(p.dPX * p.Q),
      p.t2 * p.t2 * integrate_unit(kOneMinusX * p.Q * p.Q),
      p.t2 / 2 * integrate_unit(kOneMinusX * kOneMinusX * p.dQ * p.dQ),
      -p.t2 * p.t2 / 4 * p.Q1one * p.Q1one,
      p.t2 / 4 * integrate_unit(p.Q * p.Q),
  };
  for (auto& x : t) x.canonicalize();
  return t;
}

Rational lambda_exact(const MollifierSpec& spec) {
  Rational sum = 0;
  for (const auto& t : lambda_terms(spec)) sum += t;
  sum.canonicalize();
  return sum;
}

Rational proportion(const MollifierSpec& spec) {
  const Rational lambda = lambda_exact(spec);
  if (sgn(lambda) == 0) throw DegenerateError("second moment vanishes: the mollifier is identically zero");
  const Rational s1 = s1_main(spec);
  Rational r = s1 * s1 / lambda;
  r.canonicalize();
  return r;
}

CorollaryTerms corollary_terms(const MollifierSpec& spec) {
  const auto p = pieces(spec);
  CorollaryTerms c;
  c.cor21 = p.t2 / 2 * p.Q1one;
  c.cor22 = -p.t2 / 2 * p.P1 * p.Q1one + p.t2 * integrate_unit(p.PX * p.Q) +
            p.t2 / (2 * p.t1) * integrate_unit(p.dPX * p.Q);
  c.cor23 = p.t2 * p.t2 * integrate_unit(kOneMinusX * p.Q * p.Q) +
            p.t2 / 2 * integrate_unit(kOneMinusX * kOneMinusX * p.dQ * p.dQ) - p.t2 * p.t2 / 4 * p.Q1one * p.Q1one +
            p.t2 / 4 * integrate_unit(p.Q * p.Q);
  c.cor21.canonicalize();
  c.cor22.canonicalize();
  c.cor23.canonicalize();
  return c;
}

BaselineMoments is_baseline(const RationalPoly& P, const Rational& theta1) {
  if (sgn(P.coeff(0)) != 0) throw ValidationError("P(0) must be 0");
  if (sgn(theta1) <= 0) throw ValidationError("theta1 must be positive");
  const auto dP = P.derivative();
  BaselineMoments m;
  m.first = P(Rational(1));
  m.second = m.first * m.first + integrate_unit(dP * dP) / theta1;
  m.second.canonicalize();
  return m;
}

std::vector<double> exp_poly_moments(int max_j, double c) {
  std::vector<double> out(static_cast<std::size_t>(max_j) + 1);
  if (std::abs(c) <= 8.0) {
    // int x^j (1-x)^k = j! k! / (j+k+1)!, summed against the Taylor series of exp(-c(1-x))
    for (int j = 0; j <= max_j; ++j) {
      long double term = 1.0L / (j + 1);
      long double sum = term;
      for (int k = 1; k < 400; ++k) {
        term *= -static_cast<long double>(c) / (j + k + 1);
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum)) break;
      }
      out[static_cast<std::size_t>(j)] = static_cast<double>(sum);
    }
    return out;
  }
  // integration by parts: I_j = (1 - j I_{j-1}) / c
  long double prev = (1.0L - std::exp(-static_cast<long double>(c))) / c;
  out[0] = static_cast<double>(prev);
  for (int j = 1; j <= max_j; ++j) {
    prev = (1.0L - j * prev) / c;
    out[static_cast<std::size_t>(j)] = static_cast<double>(prev);
  }
  return out;
}

double shifted_I(const MollifierSpec& spec, double alpha_logy2) {
  require_valid(spec);
  const auto q = spec.Q.to_doubles();
  if (q.empty()) return 0.0;
  const auto m = exp_poly_moments(static_cast<int>(q.size()) - 1, alpha_logy2);
  double integral = 0;
  for (std::size_t j = 0; j < q.size(); ++j) integral += q[j] * m[j];
  const double t2 = to_double(spec.theta2);
  return t2 * integral - t2 / 2 * to_double(antiderivative(spec.Q)(Rational(1)));
}

namespace {

// Gauss-Legendre rule moved to [0, 1].
struct UnitRule {
  std::vector<double> x, w;
  explicit UnitRule(int n) {
    const auto& g = gauss_legendre(n);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      x.push_back(0.5 * (1 + g.nodes[i]));
      w.push_back(0.5 * g.weights[i]);
    }
  }
};

struct ShiftContext {
  double alpha, beta, L, l1, l2, th1, th2;
  std::vector<double> P, Q, Q1;
  UnitRule low, high;

  ShiftContext(const MollifierSpec& spec, std::int64_t q, double a, double b, int n, int n_high)
      : alpha(a), beta(b), low(n), high(n_high) {
    require_valid(spec);
    if (q < 3) throw DomainError("modulus must be at least 3");
    L = std::log(static_cast<double>(q));
    if (std::abs(a) > 10 / L || std::abs(b) > 10 / L) throw DomainError("shifts must satisfy |alpha|, |beta| <= 10 / log q");
    th1 = to_double(spec.theta1);
    th2 = to_double(spec.theta2);
    l1 = th1 * L;
    l2 = th2 * L;
    P = spec.P.to_doubles();
    Q = spec.Q.to_doubles();
    Q1 = antiderivative(spec.Q).to_doubles();
  }

  // int_0^1 exp(-(alpha + beta) t rate) dt on the given rule
  template <typename T>
  T t_average(const T& rate, const UnitRule& rule) const {
    using std::exp;
    const double s = alpha + beta;
    T acc{};
    for (std::size_t k = 0; k < rule.x.size(); ++k) acc += exp(rate * (-s * rule.x[k])) * rule.w[k];
    return acc;
  }

  template <typename T>
  T p(const T& x) const { return horner<T>(P, x); }
  template <typename T>
  T q(const T& x) const { return horner<T>(Q, x); }
  template <typename T>
  T q1(const T& x) const { return horner<T>(Q1, x); }
};

template <typename T>
T j1_brace(const ShiftContext& c, const T& a, const T& b) {
  using std::exp;
  const double al = c.alpha, be = c.beta;
  T first{}, second{};
  for (std::size_t i = 0; i < c.high.x.size(); ++i) {
    const double x = c.high.x[i];
    const T px = c.p(a + (1 - c.th2 * (1 - x) / c.th1));
    T inner{};
    for (std::size_t j = 0; j < c.high.x.size(); ++j) {
      const double u = x * c.high.x[j];
      const T e = exp(a * (be * c.l1) + (b * al - be * u) * c.l2);
      const T rate = c.L + a * c.l1 + (b - u) * c.l2;
      const T lin = 1 + a * c.th1 + (b - u) * c.th2;
      inner += e * c.t_average(rate, c.high) * lin * px * c.q(b + (x - u)) * (x * c.high.w[j]);
    }
    first += inner * c.high.w[i];
  }
  for (std::size_t i = 0; i < c.low.x.size(); ++i) {
    const double x = c.low.x[i];
    const T e = exp(a * (be * c.l1) + b * (al * c.l2));
    const T rate = c.L + a * c.l1 + b * c.l2;
    const T lin = 1 + a * c.th1 + b * c.th2;
    second += e * c.t_average(rate, c.low) * lin * c.p(a + (1 - c.th2 * (1 - x) / c.th1)) * c.q1(b + x) * c.low.w[i];
  }
  return first * (c.th2 / c.th1) - second * (c.th2 / (2 * c.th1));
}

template <typename T>
T j2_brace(const ShiftContext& c, const T& a, const T& b) {
  using std::exp;
  const double al = c.alpha, be = c.beta;
  T t1{}, t2{}, t3{}, t4{}, t5{};
  for (std::size_t i = 0; i < c.low.x.size(); ++i) {
    const double x = c.low.x[i];
    const T e = exp((b * al + a * be) * c.l2);
    const T common = e * c.t_average(c.L + (a + b) * c.l2, c.low) * (1 + (a + b) * c.th2) * c.low.w[i];
    t1 += common * (1 - x) * (1 - x) * c.q(a + x) * c.q(b + x);
    t5 += common * c.q1(a + x) * c.q1(b + x);
  }
  const auto& h = c.high;
  for (std::size_t i = 0; i < h.x.size(); ++i) {
    const double x = h.x[i];
    const T q1b = c.q1(b + x);
    for (std::size_t j = 0; j < h.x.size(); ++j) {
      const double u = x * h.x[j];
      const double wu = x * h.w[j] * h.w[i];
      const T qa = c.q(a + (x - u));
      const T rate3 = c.L + (a + b - u) * c.l2;
      const T av3 = c.t_average(rate3, h);
      const T lin3 = 1 + (a + b - u) * c.th2;
      t3 += exp((b * al + a * be - al * u) * c.l2) * av3 * lin3 * qa * q1b * wu;
      t4 += exp((a * al + b * be - be * u) * c.l2) * av3 * lin3 * qa * q1b * wu;
      for (std::size_t k = 0; k < h.x.size(); ++k) {
        const double v = x * h.x[k];
        const T rate = c.L + (a + b - u - v) * c.l2;
        t2 += exp((b * al + a * be - al * u - be * v) * c.l2) * c.t_average(rate, h) * (1 + (a + b - u - v) * c.th2) * qa *
              c.q(b + (x - v)) * (wu * x * h.w[k]);
      }
    }
  }
  return t1 * (c.th2 / 2) + t2 * c.th2 - t3 * (c.th2 / 2) - t4 * (c.th2 / 2) + t5 * (c.th2 / 4);
}

template <typename Brace>
ShiftedMomentResult jet_result(const MollifierSpec& spec, std::int64_t q, double alpha, double beta, const ShiftedOptions& opt,
                               Brace brace) {
  ShiftedMomentResult r;
  r.alpha = alpha;
  r.beta = beta;
  r.method = "jet";
  r.nodes = opt.nodes;
  r.nodes_high_dim = opt.nodes_high_dim;
  const ShiftContext base(spec, q, alpha, beta, opt.nodes, opt.nodes_high_dim);
  r.value = brace(base, Jet11::var_a(), Jet11::var_b()).fab;
  if (opt.check_refinement) {
    const ShiftContext fine(spec, q, alpha, beta, 2 * opt.nodes, 2 * opt.nodes_high_dim);
    r.refinement_change = std::abs(brace(fine, Jet11::var_a(), Jet11::var_b()).fab - r.value);
    if (!(r.refinement_change <= opt.refinement_tol))
      throw AccuracyError("shifted moment quadrature did not settle under node doubling");
  }
  return r;
}

template <typename Brace>
ShiftedMomentResult fd_result(const MollifierSpec& spec, std::int64_t q, double alpha, double beta, double h,
                              const ShiftedOptions& opt, Brace brace) {
  ShiftedMomentResult r;
  r.alpha = alpha;
  r.beta = beta;
  r.method = "finite-difference";
  r.nodes = opt.nodes;
  r.nodes_high_dim = opt.nodes_high_dim;
  const ShiftContext c(spec, q, alpha, beta, opt.nodes, opt.nodes_high_dim);
  auto mixed = [&](double s) {
    return (brace(c, s, s) - brace(c, s, -s) - brace(c, -s, s) + brace(c, -s, -s)) / (4 * s * s);
  };
  r.value = (4 * mixed(h / 2) - mixed(h)) / 3;
  return r;
}

auto j1_any = [](const ShiftContext& c, const auto& a, const auto& b) { return j1_brace(c, a, b); };
auto j2_any = [](const ShiftContext& c, const auto& a, const auto& b) { return j2_brace(c, a, b); };

}  // namespace

double t_integral_log(double z, double s, int nodes) {
  const UnitRule rule(nodes);
  const double lz = std::log(z);
  double acc = 0;
  for (std::size_t k = 0; k < rule.x.size(); ++k) acc += std::exp(-s * rule.x[k] * lz) * rule.w[k];
  return lz * acc;
}

ShiftedMomentResult shifted_J1(const MollifierSpec& spec, std::int64_t q, double alpha, double beta, const ShiftedOptions& opt) {
  return jet_result(spec, q, alpha, beta, opt, j1_any);
}

ShiftedMomentResult shifted_J2(const MollifierSpec& spec, std::int64_t q, double alpha, double beta, const ShiftedOptions& opt) {
  return jet_result(spec, q, alpha, beta, opt, j2_any);
}

ShiftedMomentResult shifted_J1_fd(const MollifierSpec& spec, std::int64_t q, double alpha, double beta, double h,
                                  const ShiftedOptions& opt) {
  return fd_result(spec, q, alpha, beta, h, opt, j1_any);
}

ShiftedMomentResult shifted_J2_fd(const MollifierSpec& spec, std::int64_t q, double alpha, double beta, double h,
                                  const ShiftedOptions& opt) {
  return fd_result(spec, q, alpha, beta, h, opt, j2_any);
}

}  // namespace mollify
