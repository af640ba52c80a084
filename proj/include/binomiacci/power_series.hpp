#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated formal power series over exact rationals and the
 *        generating functions of the Binomiacci numbers.
 *
 * Three generating functions are expanded here:
 *
 *  - A_k(z)  = sum_n B(k,n) z^n, one row of the table;
 *  - G(z, w) = sum_{k,n} B(k,n) z^n w^k
 *            = (1 - z - w + zw - z^2 w^2) / ((1-z-z^2)(1-w-w^2)(1-z-w));
 *  - C(s)    = sum_n B(n,n) s^n
 *            = (s-1)(sqrt(1-4s) - s) / ((s^2+4s-1) sqrt(1-4s)).
 *
 * Binary operations truncate to the smaller of the two orders.
 */

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "binomiacci/exact.hpp"

namespace binomiacci {

/// sum_{i=0}^{order} coeffs[i] x^i; higher powers are dropped silently.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);

  /// Pads with zeros (or truncates) to exactly order+1 coefficients.
  TruncatedSeries(std::vector<ExactRational> coeffs, std::size_t order);

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
  static TruncatedSeries one(std::size_t order);
  /// Polynomial with the given low-order coefficients.
  static TruncatedSeries polynomial(std::initializer_list<ExactRational> coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const ExactRational& operator[](std::size_t i) const { return coeffs_[i]; }
  ExactRational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }

  /// Same series at a lower order. Throws if new_order exceeds order().
  TruncatedSeries truncated(std::size_t new_order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<ExactRational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRational& factor);
/// Cauchy product.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/a to the given order; throws std::domain_error("not invertible") when
/// a[0] == 0.
TruncatedSeries series_inverse(const TruncatedSeries& a, std::size_t order);

/// The square root with constant term +1. Throws std::domain_error
/// ("sqrt requires unit constant term") unless a[0] == 1.
TruncatedSeries series_sqrt(const TruncatedSeries& a, std::size_t order);

/// 1/(1-z-z^2): the Fibonacci numbers.
TruncatedSeries fibonacci_gf(std::size_t order);

/// A_k(z) via (1-z) A_{k+1} = A_k + F(k-1), starting from A_0 = 1/(1-z-z^2)
/// and F(-1) = 0.
TruncatedSeries row_gf(std::size_t k, std::size_t order);

/// A_k(z) from its partial-fraction form
///   1/((1-z)^k (1-z-z^2)) + sum_{i=0}^{k-2} F(i) / (1-z)^{k-1-i}.
/// An independent route to row_gf for cross-checking.
TruncatedSeries row_gf_closed_form(std::size_t k, std::size_t order);

/// C(s) expanded from its closed form with exact rational series algebra.
TruncatedSeries central_gf(std::size_t order);

/// coeffs[k][n] is the coefficient of z^n w^k.
class BivariateSeries {
 public:
  BivariateSeries(std::size_t max_k, std::size_t max_n);

  static BivariateSeries one(std::size_t max_k, std::size_t max_n);

  std::size_t max_k() const { return max_k_; }
  std::size_t max_n() const { return max_n_; }

  const ExactRational& at(std::size_t k, std::size_t n) const { return coeffs_[k * (max_n_ + 1) + n]; }
  ExactRational& at(std::size_t k, std::size_t n) { return coeffs_[k * (max_n_ + 1) + n]; }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::size_t max_k_;
  std::size_t max_n_;
  std::vector<ExactRational> coeffs_;
};

/// Product truncated to the smaller extent in each variable.
BivariateSeries bivariate_mul(const BivariateSeries& a, const BivariateSeries& b);

/// 1/a on the same grid; throws std::domain_error("not invertible") when the
/// constant term is zero.
BivariateSeries bivariate_inverse(const BivariateSeries& a);

/// G(z, w) on a (max_k+1) x (max_n+1) grid.
BivariateSeries bivariate_gf(std::size_t max_k, std::size_t max_n);

/// Series whose n-th coefficient is g.at(n, n), of order min(max_k, max_n).
TruncatedSeries diagonal_of(const BivariateSeries& g);

/// Same, but throws std::invalid_argument if the grid is smaller than order.
TruncatedSeries diagonal_of(const BivariateSeries& g, std::size_t order);

}  // namespace binomiacci
