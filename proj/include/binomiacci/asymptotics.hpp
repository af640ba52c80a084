#pragma once

/**
 * @file asymptotics.hpp
 * @brief Leading-order singularity analysis for the central Binomiacci numbers.
 *
 * A function with an algebraic singularity at alpha behaves near it like
 *
 *   f(s) = f0(s) + g(s) / (1 - s/alpha)^omega,
 *
 * and when every singularity on the circle of convergence is of this type
 * the coefficients satisfy
 *
 *   a_n ~ (1/n) sum_i g_i(alpha_i) n^{omega_i} / (Gamma(omega_i) alpha_i^n).
 *
 * For C(s) the dominant singularity is the branch point alpha = 1/4 with
 * omega = 1/2 and g(1/4) = 3, giving B(n,n) ~ 3 * 4^n / sqrt(pi n). The root
 * sqrt5 - 2 of s^2+4s-1 is closer to the origin but removable.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "binomiacci/exact.hpp"

namespace binomiacci {

/// One term of the leading-order estimate.
struct AlgebraicSingularity {
  double alpha;
  double omega;
  double g_at_alpha;

  /// Validating constructor: alpha != 0 and omega not in {0, -1, -2, ...}.
  static AlgebraicSingularity make(double alpha, double omega, double g_at_alpha);
};

/// sign * exp(log_abs). Used where the value itself would overflow a double.
struct SignedLog {
  int sign = 0;
  double log_abs = 0.0;

  double value() const;
};

/// The split C(s) = f0(s) + g(s) / sqrt(1-4s) around s = 1/4.
struct CentralDecomposition {
  std::string f0_description;
  std::string g_description;
  AlgebraicSingularity singularity;
  /// g(1/4) as an exact rational; the double in singularity is derived from it.
  ExactRational g_at_alpha_exact;
};

CentralDecomposition decompose_C();

/// f0(s) = (s-1)/(s^2+4s-1)
std::complex<double> decomposition_f0(std::complex<double> s);
/// g(s) = (s-s^2)/(s^2+4s-1)
std::complex<double> decomposition_g(std::complex<double> s);
/// g evaluated exactly; throws std::domain_error at a root of s^2+4s-1.
ExactRational decomposition_g_exact(const ExactRational& s);

/// f0(s) + g(s) (1-4s)^{-1/2}, principal branch.
std::complex<double> eval_decomposition(std::complex<double> s);

/// Gamma(x) for x > 0; throws std::domain_error otherwise.
double gamma_positive(double x);

/// The leading-term sum evaluated in log space. n >= 1.
SignedLog algebraic_estimate_log(std::span<const AlgebraicSingularity> singularities, std::size_t n);

/// algebraic_estimate_log(...).value(); overflows to +-inf for very large n.
double algebraic_estimate(std::span<const AlgebraicSingularity> singularities, std::size_t n);

/// 3 * 4^n / sqrt(pi n), computed by its own formula.
SignedLog coarse_estimate_log(std::size_t n);
double coarse_estimate(std::size_t n);

struct EstimateRow {
  std::size_t n;
  ExactInteger exact;
  double estimate;
  /// ln(estimate); stays finite when estimate itself overflows.
  double log_estimate;
  double ratio;
};

/// Rows n = 1..n_max comparing B(n,n) with coarse_estimate(n).
std::vector<EstimateRow> ratio_table(std::size_t n_max);

/// a + b sqrt5 with integer a, b.
struct QuadraticInteger {
  ExactInteger rational_part;
  ExactInteger sqrt5_part;

  friend QuadraticInteger operator+(const QuadraticInteger& x, const QuadraticInteger& y);
  friend QuadraticInteger operator*(const QuadraticInteger& x, const QuadraticInteger& y);
  friend bool operator==(const QuadraticInteger&, const QuadraticInteger&) = default;
};

/// Exact facts showing s = sqrt5 - 2 is a removable singularity of C.
struct RemovableWitness {
  QuadraticInteger root;                 // sqrt5 - 2
  QuadraticInteger root_squared;         // (sqrt5 - 2)^2
  QuadraticInteger one_minus_four_root;  // 1 - 4 (sqrt5 - 2)
  QuadraticInteger quadratic_at_root;    // s^2 + 4s - 1 at the root

  /// root^2 == 9 - 4 sqrt5 == 1 - 4 root, so sqrt(1-4s) - s vanishes there,
  /// and root is a zero of s^2+4s-1.
  bool holds() const;
};

RemovableWitness removable_singularity_witness();

}  // namespace binomiacci
