#pragma once

#include <complex>
#include <vector>

namespace mollify {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached, thread-safe. n >= 1.
const GaussRule& gauss_legendre(int n);

/// n-point Gauss-Legendre on [a, b].
template <typename F>
auto integrate_gl(F&& f, double a, double b, int n) {
  const auto& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  decltype(f(mid)) acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += f(mid + half * rule.nodes[i]) * (rule.weights[i] * half);
  return acc;
}

/// log Gamma for complex arguments away from the poles. The imaginary part is
/// only determined modulo 2 pi; callers exponentiate differences.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace mollify
