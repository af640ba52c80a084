#include "binomiacci/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "binomiacci/sequence.hpp"

namespace binomiacci {

namespace {

bool is_non_positive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

// Sign of Gamma(x) for x not a non-positive integer.
int gamma_sign(double x) {
  if (x > 0.0) return 1;
  return static_cast<long long>(std::ceil(-x)) % 2 == 0 ? 1 : -1;
}

SignedLog log_sum(const std::vector<SignedLog>& terms) {
  double largest = -INFINITY;
  for (const auto& t : terms) {
    if (t.sign != 0) largest = std::max(largest, t.log_abs);
  }
  if (largest == -INFINITY) return {0, -INFINITY};
  double scaled = 0.0;
  for (const auto& t : terms) {
    if (t.sign != 0) scaled += t.sign * std::exp(t.log_abs - largest);
  }
  if (scaled == 0.0) return {0, -INFINITY};
  return {scaled > 0.0 ? 1 : -1, largest + std::log(std::abs(scaled))};
}

void require_positive_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("estimate requires n >= 1");
}

}  // namespace

AlgebraicSingularity AlgebraicSingularity::make(double alpha, double omega, double g_at_alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha)) throw std::invalid_argument("singularity location must be nonzero");
  if (!std::isfinite(omega) || is_non_positive_integer(omega)) {
    throw std::invalid_argument("exponent must not be a non-positive integer");
  }
  return {alpha, omega, g_at_alpha};
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

std::complex<double> decomposition_f0(std::complex<double> s) { return (s - 1.0) / (s * s + 4.0 * s - 1.0); }

std::complex<double> decomposition_g(std::complex<double> s) { return (s - s * s) / (s * s + 4.0 * s - 1.0); }

ExactRational decomposition_g_exact(const ExactRational& s) {
  const ExactRational denominator = s * s + 4 * s - 1;
  if (denominator == 0) throw std::domain_error("singular parameter");
  return (s - s * s) / denominator;
}

std::complex<double> eval_decomposition(std::complex<double> s) {
  return decomposition_f0(s) + decomposition_g(s) / std::sqrt(1.0 - 4.0 * s);
}

CentralDecomposition decompose_C() {
  const ExactRational alpha(1, 4);
  const ExactRational g = decomposition_g_exact(alpha);
  return {
      "(s-1)/(s^2+4s-1)",
      "(s-s^2)/(s^2+4s-1)",
      AlgebraicSingularity::make(alpha.convert_to<double>(), 0.5, g.convert_to<double>()),
      g,
  };
}

double gamma_positive(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_positive requires x > 0");
  return std::tgamma(x);
}

SignedLog algebraic_estimate_log(std::span<const AlgebraicSingularity> singularities, std::size_t n) {
  require_positive_index(n);
  const double log_n = std::log(static_cast<double>(n));
  std::vector<SignedLog> terms;
  terms.reserve(singularities.size());
  for (const auto& sing : singularities) {
    if (sing.g_at_alpha == 0.0) continue;
    // lgamma's sign output is not thread-safe; the sign is tracked separately.
    const double log_gamma = std::lgamma(sing.omega);
    int sign = (sing.g_at_alpha > 0.0 ? 1 : -1) * gamma_sign(sing.omega);
    if (sing.alpha < 0.0 && n % 2 == 1) sign = -sign;
    const double log_term = std::log(std::abs(sing.g_at_alpha)) + sing.omega * log_n - log_gamma -
                            static_cast<double>(n) * std::log(std::abs(sing.alpha)) - log_n;
    terms.push_back({sign, log_term});
  }
  return log_sum(terms);
}

double algebraic_estimate(std::span<const AlgebraicSingularity> singularities, std::size_t n) {
  return algebraic_estimate_log(singularities, n).value();
}

SignedLog coarse_estimate_log(std::size_t n) {
  require_positive_index(n);
  const double nd = static_cast<double>(n);
  return {1, std::log(3.0) + nd * std::log(4.0) - 0.5 * std::log(std::numbers::pi * nd)};
}

double coarse_estimate(std::size_t n) { return coarse_estimate_log(n).value(); }

std::vector<EstimateRow> ratio_table(std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("ratio_table requires n_max >= 1");
  const auto central_values = central_sequence(n_max);
  std::vector<EstimateRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const SignedLog estimate = coarse_estimate_log(n);
    const ExactInteger& exact = central_values[n];
    rows.push_back({n, exact, estimate.value(), estimate.log_abs, std::exp(estimate.log_abs - log_abs(exact))});
  }
  return rows;
}

QuadraticInteger operator+(const QuadraticInteger& x, const QuadraticInteger& y) {
  return {x.rational_part + y.rational_part, x.sqrt5_part + y.sqrt5_part};
}

QuadraticInteger operator*(const QuadraticInteger& x, const QuadraticInteger& y) {
  return {x.rational_part * y.rational_part + 5 * x.sqrt5_part * y.sqrt5_part,
          x.rational_part * y.sqrt5_part + x.sqrt5_part * y.rational_part};
}

bool RemovableWitness::holds() const {
  const QuadraticInteger nine_minus_four_sqrt5{9, -4};
  return root_squared == nine_minus_four_sqrt5 && one_minus_four_root == root_squared &&
         quadratic_at_root == QuadraticInteger{0, 0};
}

RemovableWitness removable_singularity_witness() {
  const QuadraticInteger root{-2, 1};
  const QuadraticInteger squared = root * root;
  const QuadraticInteger one_minus_four_root = QuadraticInteger{1, 0} + QuadraticInteger{-4, 0} * root;
  const QuadraticInteger quadratic = squared + QuadraticInteger{4, 0} * root + QuadraticInteger{-1, 0};
  return {root, squared, one_minus_four_root, quadratic};
}

}  // namespace binomiacci
