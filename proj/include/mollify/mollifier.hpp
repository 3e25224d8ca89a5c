#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mollify/rational_poly.hpp"

namespace mollify {

/// Two-piece mollifier psi_1 + psi_2 with lengths y_i = q^theta_i and
/// profiles P (for psi_1) and Q (for psi_2).
struct MollifierSpec {
  Rational theta1;
  Rational theta2;
  RationalPoly P;
  RationalPoly Q;
  std::optional<std::int64_t> q_for_lengths;

  /// Second-moment asymptotics are proven for theta2 < theta1 < 1/2 only.
  bool outside_second_moment_range() const;
};

/// theta1 = theta2 = 1/2, P = 1.05x - 0.05x^2, Q = 0.9x.
MollifierSpec paper_preset();

/// theta1 = 1/2, P = x, Q = 0: the single-piece optimum.
MollifierSpec is_baseline_preset();

/// Checks P(0) = Q(0) = 0 and 0 < theta2 <= theta1 < 1. Returns the list of
/// violations; empty means valid.
std::vector<std::string> spec_violations(const MollifierSpec& spec);

/// Throws ValidationError listing every violation.
void require_valid(const MollifierSpec& spec);

}  // namespace mollify
