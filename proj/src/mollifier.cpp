#include "mollify/mollifier.hpp"

#include "mollify/errors.hpp"

namespace mollify {

bool MollifierSpec::outside_second_moment_range() const {
  return !(theta2 < theta1 && theta1 < Rational(1, 2));
}

MollifierSpec paper_preset() {
  MollifierSpec s;
  s.theta1 = Rational(1, 2);
  s.theta2 = Rational(1, 2);
  s.P = RationalPoly{0, Rational(21, 20), Rational(-1, 20)};
  s.Q = RationalPoly{0, Rational(9, 10)};
  return s;
}

MollifierSpec is_baseline_preset() {
  MollifierSpec s;
  s.theta1 = Rational(1, 2);
  s.theta2 = Rational(1, 2);
  s.P = RationalPoly{0, 1};
  return s;
}

std::vector<std::string> spec_violations(const MollifierSpec& spec) {
  std::vector<std::string> out;
  if (spec.P.coeff(0) != 0) out.emplace_back("P(0) must be 0, got " + format_rational(spec.P.coeff(0)));
  if (spec.Q.coeff(0) != 0) out.emplace_back("Q(0) must be 0, got " + format_rational(spec.Q.coeff(0)));
  if (!(spec.theta1 > 0 && spec.theta1 < 1)) out.emplace_back("theta1 must lie in (0, 1)");
  if (!(spec.theta2 > 0 && spec.theta2 < 1)) out.emplace_back("theta2 must lie in (0, 1)");
  if (spec.theta2 > spec.theta1) out.emplace_back("theta2 must not exceed theta1");
  return out;
}

void require_valid(const MollifierSpec& spec) {
  const auto v = spec_violations(spec);
  if (v.empty()) return;
  std::string msg = "invalid mollifier:";
  for (const auto& s : v) msg += " " + s + ";";
  throw ValidationError(msg);
}

}  // namespace mollify
