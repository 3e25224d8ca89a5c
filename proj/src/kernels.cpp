#include "mollify/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mollify/errors.hpp"
#include "mollify/quadrature.hpp"

namespace mollify {

namespace {

constexpr int kPanelNodes = 20;

bool is_w(KernelKind k) { return k == KernelKind::WPlus || k == KernelKind::WMinus; }

}  // namespace

MellinKernel::MellinKernel(const KernelSpec& spec) : spec_(spec) {
  if (!(spec.contour_re > 0.0)) throw DomainError("contour_re must be positive");
  if (spec.truncation_T < 8.0) throw DomainError("truncation_T must be >= 8");
  if (spec.node_count < 200) throw DomainError("node_count must be >= 200");
  const double max_shift = std::max(std::abs(spec.alpha), std::abs(spec.beta));
  if (is_w(spec.kind) && max_shift >= 0.25) {
    throw DomainError("W kernels require |alpha|, |beta| < 1/4");
  }
  if (spec.kind == KernelKind::VDual && std::abs(spec.alpha) >= 0.5) {
    throw DomainError("dual kernel requires |alpha| < 1/2");
  }
  right_ = build_line(spec.contour_re);
  // Nearest pole left of 0: none for V, -1/2 -/+ shift for the Gamma factors.
  double left_sigma = spec.contour_re;
  if (spec.kind != KernelKind::V) left_sigma = std::min(spec.contour_re, 0.5 * (0.5 - max_shift));
  left_ = build_line(-left_sigma);
  residue_at_zero_ = multiplier({0.0, 0.0}).real();
}

std::complex<double> MellinKernel::multiplier(std::complex<double> s) const {
  using C = std::complex<double>;
  const C gauss = std::exp(s * s);
  const double a = spec_.alpha;
  const double b = spec_.beta;
  switch (spec_.kind) {
    case KernelKind::V:
      return gauss;
    case KernelKind::VDual:
      return gauss * std::exp(log_gamma((0.5 - a + s) / 2.0) - log_gamma((0.5 + a - s) / 2.0));
    case KernelKind::WPlus:
    case KernelKind::WMinus: {
      const double sum = a + b;
      const C p = sum == 0.0 ? C(1.0) : (sum * sum - 4.0 * s * s) / (sum * sum);
      const double sign = spec_.kind == KernelKind::WPlus ? 1.0 : -1.0;
      const C lg = log_gamma((0.5 + sign * a + s) / 2.0) + log_gamma((0.5 + sign * b + s) / 2.0) -
                   log_gamma(C((0.5 + a) / 2.0)) - log_gamma(C((0.5 + b) / 2.0));
      return gauss * p * std::exp(lg);
    }
  }
  return gauss;
}

MellinKernel::Line MellinKernel::build_line(double sigma) const {
  const int panels = std::max(1, spec_.node_count / kPanelNodes);
  const auto& rule = gauss_legendre(kPanelNodes);
  const double width = 2.0 * spec_.truncation_T / panels;
  Line line;
  line.s.reserve(static_cast<std::size_t>(panels * kPanelNodes));
  line.weight.reserve(line.s.capacity());
  for (int p = 0; p < panels; ++p) {
    const double lo = -spec_.truncation_T + p * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = lo + 0.5 * width * (rule.nodes[i] + 1.0);
      const std::complex<double> s(sigma, t);
      // ds = i dt, and 1/(2 pi i) * i = 1/(2 pi).
      line.s.push_back(s);
      line.weight.push_back(multiplier(s) / s * (0.5 * width * rule.weights[i] / (2.0 * std::numbers::pi)));
    }
  }
  return line;
}

double MellinKernel::evaluate(const Line& line, double log_x) const {
  std::complex<double> acc{};
  double magnitude = 0.0;
  for (std::size_t k = 0; k < line.s.size(); ++k) {
    const std::complex<double> term = line.weight[k] * std::exp(-line.s[k] * log_x);
    acc += term;
    magnitude += std::abs(term);
  }
  if (std::abs(acc.imag()) > 1e-12 * std::max(1.0, magnitude)) {
    throw AccuracyError("kernel quadrature left an imaginary residue of " + std::to_string(acc.imag()));
  }
  return acc.real();
}

double MellinKernel::operator()(double x) const {
  if (!(x > 0.0)) throw DomainError("kernel argument must be positive");
  const double lx = std::log(x);
  if (spec_.shift_left_for_small_x && x < 1.0) return residue_at_zero_ + evaluate(left_, lx);
  return evaluate(right_, lx);
}

double kernel_V(double x, const KernelSpec& spec) {
  KernelSpec s = spec;
  s.kind = KernelKind::V;
  return MellinKernel(s)(x);
}

double kernel_W(double x, const KernelSpec& spec) {
  if (!is_w(spec.kind)) throw DomainError("kernel_W needs kind WPlus or WMinus");
  return MellinKernel(spec)(x);
}

KernelTable::KernelTable(const MellinKernel& kernel, double log_min, double log_max, double step)
    : log_min_(log_min), log_max_(log_max), step_(step), below_(kernel.small_x_limit()) {
  if (!(log_max > log_min) || !(step > 0.0)) throw DomainError("bad kernel table range");
  const auto n = static_cast<std::size_t>(std::ceil((log_max - log_min) / step)) + 1;
  log_max_ = log_min_ + static_cast<double>(n - 1) * step_;
  values_.resize(n);
  for (std::size_t k = 0; k < n; ++k) values_[k] = kernel(std::exp(log_min_ + static_cast<double>(k) * step_));
}

double KernelTable::operator()(double x) const {
  const double u = std::log(x);
  if (u <= log_min_) return below_;
  if (u >= log_max_) return 0.0;
  const double pos = (u - log_min_) / step_;
  const auto n = static_cast<std::ptrdiff_t>(values_.size());
  auto base = static_cast<std::ptrdiff_t>(std::floor(pos)) - 1;
  base = std::clamp<std::ptrdiff_t>(base, 0, n - 4);
  const double t = pos - static_cast<double>(base);
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    double w = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) w *= (t - j) / static_cast<double>(i - j);
    }
    acc += w * values_[static_cast<std::size_t>(base + i)];
  }
  return acc;
}

MellinProfileValue mellin_profile(int i, double y, double h) {
  if (i < 1) throw DomainError("mellin_profile needs i >= 1");
  if (!(y > 1.0) || !(h >= 1.0)) throw DomainError("mellin_profile needs y > 1 and h >= 1");
  if (h > y) return {0.0, true};
  const double ell = std::log(y / h);
  if (ell <= 0.0) return {0.0, false};
  const double radius = static_cast<double>(i) / ell;
  const int points = 64 + 4 * i;
  // (1/2 pi i) contour integral over |u| = r; du = i u dtheta.
  std::complex<double> acc{};
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / points;
    const std::complex<double> u = std::polar(radius, theta);
    acc += std::exp(u * ell - static_cast<double>(i) * std::log(u));
  }
  return {acc.real() / points, false};
}

}  // namespace mollify
