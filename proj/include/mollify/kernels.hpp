#pragma once

#include <complex>
#include <vector>

namespace mollify {

enum class KernelKind {
  V,       // e^{s^2}
  WPlus,   // e^{s^2} p(s) g^+_{alpha,beta}(s)
  WMinus,  // e^{s^2} p(s) g^-_{alpha,beta}(s)
  VDual,   // e^{s^2} Gamma((1/2 - alpha + s)/2) / Gamma((1/2 + alpha - s)/2)
};

/// A kernel (1/2 pi i) int_{(c)} m(s) x^{-s} ds / s along a vertical line.
struct KernelSpec {
  KernelKind kind = KernelKind::V;
  double alpha = 0.0;
  double beta = 0.0;
  double contour_re = 2.0;
  double truncation_T = 10.0;
  int node_count = 400;
  /// For x < 1 evaluate on the mirrored line Re(s) < 0 and add the residues
  /// crossed; the right line loses all precision there (x^{-c} is huge).
  bool shift_left_for_small_x = true;
};

/// Precomputed node data for one kernel; evaluation is O(node_count).
class MellinKernel {
 public:
  explicit MellinKernel(const KernelSpec& spec);

  /// Throws DomainError for x <= 0 and AccuracyError if the imaginary
  /// residue of the (conjugate-symmetric) quadrature is not negligible.
  double operator()(double x) const;

  /// Limit as x -> 0+: the residue at s = 0.
  double small_x_limit() const { return residue_at_zero_; }
  const KernelSpec& spec() const { return spec_; }

  /// The factor m(s) multiplying x^{-s} ds / s.
  std::complex<double> multiplier(std::complex<double> s) const;

 private:
  struct Line {
    std::vector<std::complex<double>> s;
    std::vector<std::complex<double>> weight;  // quadrature weight * m(s) / (2 pi s) * ds/dt
  };
  Line build_line(double sigma) const;
  double evaluate(const Line& line, double log_x) const;

  KernelSpec spec_;
  Line right_;
  Line left_;
  double residue_at_zero_ = 1.0;
};

/// V(x) = (1/2 pi i) int_{(2)} e^{s^2} x^{-s} ds/s.
double kernel_V(double x, const KernelSpec& spec = {});

/// W^{+/-}_{alpha,beta}(x) with G(s) = e^{s^2} p(s), p(s) = ((a+b)^2 - 4s^2)/(a+b)^2.
/// When alpha + beta = 0 the factor p is dropped (limit taken together with
/// the pole it was introduced to cancel). Requires |alpha|, |beta| < 1/4.
double kernel_W(double x, const KernelSpec& spec);

/// Kernel memoized on a uniform grid in log x with four-point (cubic)
/// Lagrange interpolation. Immutable after construction.
class KernelTable {
 public:
  KernelTable(const MellinKernel& kernel, double log_min, double log_max, double step = 0.01);
  double operator()(double x) const;
  double log_min() const { return log_min_; }
  double log_max() const { return log_max_; }

 private:
  double log_min_;
  double log_max_;
  double step_;
  double below_;
  std::vector<double> values_;
};

struct MellinProfileValue {
  double value = 0.0;
  bool beyond_support = false;  // h > y: the integral vanishes
};

/// (1/2 pi i) int_{(2)} y^u u^{-(i+1)} h^{-u} du, i >= 1, which equals
/// (log(y/h))^i / i! for h < y. The line is closed to the left onto a circle
/// |u| = i / log(y/h) and integrated by the trapezoidal rule.
MellinProfileValue mellin_profile(int i, double y, double h);

}  // namespace mollify
