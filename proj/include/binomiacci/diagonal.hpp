#pragma once

/**
 * @file diagonal.hpp
 * @brief Floating-point check of the residue computation behind C(s).
 *
 * The diagonal generating function C(s) is the constant term of G(z, s/z)
 * as a Laurent series in z, i.e. the sum of residues of
 *
 *   F(z) = G(z, s/z) / z
 *        = z (z - s - z^2 + zs - zs^2) / ((1-z-z^2)(z - s - z^2)(z^2 - zs - s^2))
 *
 * at the poles that shrink to 0 with s:
 *
 *   z1 = (1 - sqrt(1-4s)) / 2,  z2 = (1+sqrt5) s / 2,  z3 = (1-sqrt5) s / 2.
 *
 * The fixed poles of 1-z-z^2 stay outside the contour and are not listed.
 * All square roots of 1-4s use the principal branch.
 */

#include <array>
#include <complex>
#include <string>

namespace binomiacci {

using ComplexValue = std::complex<double>;

/// Denominator factors closer than this to zero are reported as poles.
inline constexpr double kPoleTolerance = 1e-12;
/// Minimum pairwise distance between z1, z2, z3.
inline constexpr double kPoleCollisionTolerance = 1e-10;
/// Closeness to s = 1/4 or to a root of s^2+4s-1 that counts as singular.
inline constexpr double kSingularParameterTolerance = 1e-12;
/// The identity residue sum == C(s) is accepted below this absolute error.
inline constexpr double kResidueIdentityTolerance = 1e-10;
/// Offset used when extracting residues as (z - z_i) F(z).
inline constexpr double kNumericResidueRadius = 1e-6;

struct PoleSet {
  ComplexValue z1;
  ComplexValue z2;
  ComplexValue z3;
};

struct ResidueTriple {
  ComplexValue res1;
  ComplexValue res2;
  ComplexValue res3;

  ComplexValue sum() const { return res1 + res2 + res3; }
};

struct ResidueReport {
  ComplexValue s;
  ResidueTriple residues;
  ComplexValue c_value;
  double max_abs_error = 0.0;
  bool passed = false;
};

/// G(z, w) from its rational closed form. Throws std::domain_error
/// ("pole proximity") near a zero of any denominator factor.
ComplexValue eval_G(ComplexValue z, ComplexValue w);

/// F(z) = G(z, s/z)/z using the cleared-denominator form. Throws
/// std::invalid_argument for z = 0 and std::domain_error near a pole.
ComplexValue eval_F(ComplexValue z, ComplexValue s);

/// principal sqrt(1 - 4s).
ComplexValue sqrt_one_minus_4s(ComplexValue s);

/// Throws std::domain_error("degenerate pole configuration") when two of the
/// poles coincide, which includes s = 0.
PoleSet poles(ComplexValue s);

/// Closed-form residues
///   Res1 = s(1-s) / (sqrt(1-4s)(s^2+4s-1)),
///   Res2 = -2 / (sqrt5 ((3+sqrt5) s - sqrt5 + 1)),
///   Res3 = 2 / ((3 sqrt5 - 5) s + sqrt5 + 5).
/// Throws std::domain_error("singular parameter") at s = 1/4 and the roots of
/// s^2+4s-1. Defined at s = 0, where the sum is C(0) = 1.
ResidueTriple residues(ComplexValue s);

/// Residue of F at a simple pole, estimated as the mean of (z - pole) F(z)
/// over z = pole + radius * {1, i, -1, -i}. The symmetric average cancels the
/// first three error orders.
ComplexValue numeric_residue(ComplexValue s, ComplexValue pole, double radius = kNumericResidueRadius);

/// numeric_residue at z1, z2, z3 in that order.
ResidueTriple numeric_residues(ComplexValue s, double radius = kNumericResidueRadius);

/// C(s) from its closed form. Throws std::domain_error("singular parameter")
/// at s = 1/4 and at the roots of s^2+4s-1 (one of which, sqrt5-2, is
/// removable but still rejected here).
ComplexValue eval_C(ComplexValue s);

/// |Res1 + Res2 + Res3 - C(s)| with a pass flag at kResidueIdentityTolerance.
ResidueReport residue_identity_check(ComplexValue s);

}  // namespace binomiacci
