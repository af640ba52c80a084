#include "binomiacci/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace binomiacci {

namespace {

const double kSqrt5 = std::sqrt(5.0);

void require_away_from_pole(std::initializer_list<ComplexValue> factors) {
  for (const ComplexValue& f : factors) {
    if (std::abs(f) < kPoleTolerance) throw std::domain_error("pole proximity");
  }
}

ComplexValue finite_or_throw(ComplexValue v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw std::domain_error("non-finite result");
  }
  return v;
}

void require_regular_parameter(ComplexValue s) {
  const ComplexValue quadratic = s * s + 4.0 * s - 1.0;
  if (std::abs(quadratic) < kSingularParameterTolerance ||
      std::abs(1.0 - 4.0 * s) < kSingularParameterTolerance) {
    throw std::domain_error("singular parameter");
  }
}

}  // namespace

ComplexValue eval_G(ComplexValue z, ComplexValue w) {
  const ComplexValue dz = 1.0 - z - z * z;
  const ComplexValue dw = 1.0 - w - w * w;
  const ComplexValue dzw = 1.0 - z - w;
  require_away_from_pole({dz, dw, dzw});
  const ComplexValue numerator = 1.0 - z - w + z * w - z * z * w * w;
  return finite_or_throw(numerator / (dz * dw * dzw));
}

ComplexValue eval_F(ComplexValue z, ComplexValue s) {
  if (z == 0.0) throw std::invalid_argument("eval_F is undefined at z = 0");
  const ComplexValue fixed = 1.0 - z - z * z;
  const ComplexValue branch = z - s - z * z;
  const ComplexValue linear = z * z - z * s - s * s;
  require_away_from_pole({fixed, branch, linear});
  const ComplexValue numerator = z * (z - s - z * z + z * s - z * s * s);
  return finite_or_throw(numerator / (fixed * branch * linear));
}

ComplexValue sqrt_one_minus_4s(ComplexValue s) { return std::sqrt(1.0 - 4.0 * s); }

PoleSet poles(ComplexValue s) {
  const PoleSet p{
      (1.0 - sqrt_one_minus_4s(s)) / 2.0,
      (1.0 + kSqrt5) * s / 2.0,
      (1.0 - kSqrt5) * s / 2.0,
  };
  if (std::abs(p.z1 - p.z2) <= kPoleCollisionTolerance || std::abs(p.z1 - p.z3) <= kPoleCollisionTolerance ||
      std::abs(p.z2 - p.z3) <= kPoleCollisionTolerance) {
    throw std::domain_error("degenerate pole configuration");
  }
  return p;
}

ResidueTriple residues(ComplexValue s) {
  require_regular_parameter(s);
  const ComplexValue root = sqrt_one_minus_4s(s);
  ResidueTriple r;
  r.res1 = s * (1.0 - s) / (root * (s * s + 4.0 * s - 1.0));
  r.res2 = -2.0 / (kSqrt5 * ((3.0 + kSqrt5) * s - kSqrt5 + 1.0));
  r.res3 = 2.0 / ((3.0 * kSqrt5 - 5.0) * s + kSqrt5 + 5.0);
  finite_or_throw(r.res1);
  finite_or_throw(r.res2);
  finite_or_throw(r.res3);
  return r;
}

ComplexValue numeric_residue(ComplexValue s, ComplexValue pole, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("numeric_residue radius must be positive");
  constexpr std::array<ComplexValue, 4> kDirections{ComplexValue(1, 0), ComplexValue(0, 1), ComplexValue(-1, 0),
                                                    ComplexValue(0, -1)};
  ComplexValue total = 0.0;
  for (const ComplexValue& direction : kDirections) {
    const ComplexValue offset = radius * direction;
    total += offset * eval_F(pole + offset, s);
  }
  return total / 4.0;
}

ResidueTriple numeric_residues(ComplexValue s, double radius) {
  const PoleSet p = poles(s);
  return {numeric_residue(s, p.z1, radius), numeric_residue(s, p.z2, radius), numeric_residue(s, p.z3, radius)};
}

ComplexValue eval_C(ComplexValue s) {
  require_regular_parameter(s);
  const ComplexValue root = sqrt_one_minus_4s(s);
  return finite_or_throw((s - 1.0) * (root - s) / ((s * s + 4.0 * s - 1.0) * root));
}

ResidueReport residue_identity_check(ComplexValue s) {
  ResidueReport report;
  report.s = s;
  poles(s);  // rejects degenerate configurations
  report.residues = residues(s);
  report.c_value = eval_C(s);
  report.max_abs_error = std::abs(report.residues.sum() - report.c_value);
  report.passed = report.max_abs_error < kResidueIdentityTolerance;
  return report;
}

}  // namespace binomiacci
