#pragma once

/**
 * @file sequence.hpp
 * @brief Fibonacci and Binomiacci numbers straight from the recurrence.
 *
 * Binomiacci numbers B(k, n) fill a Pascal-like table whose boundary row and
 * column are Fibonacci numbers (indexed F(0) = F(1) = 1):
 *
 *   B(0, n) = F(n),  B(k, 0) = F(k),  B(k, n) = B(k, n-1) + B(k-1, n).
 *
 * This is OEIS A074829 read as a table. Everything here is exact and serves
 * as the reference every generating-function route is checked against.
 */

#include <cstddef>
#include <vector>

#include "binomiacci/exact.hpp"

namespace binomiacci {

/// Dense (max_k+1) x (max_n+1) grid, cells[k][n] = B(k, n).
class BinomiacciTable {
 public:
  BinomiacciTable(std::size_t max_k, std::size_t max_n);

  std::size_t max_k() const { return max_k_; }
  std::size_t max_n() const { return max_n_; }

  const ExactInteger& at(std::size_t k, std::size_t n) const;
  const std::vector<ExactInteger>& row(std::size_t k) const { return cells_.at(k); }
  const std::vector<std::vector<ExactInteger>>& cells() const { return cells_; }

 private:
  std::size_t max_k_;
  std::size_t max_n_;
  std::vector<std::vector<ExactInteger>> cells_;
};

/// F(j) with F(0) = F(1) = 1.
ExactInteger fibonacci(std::size_t j);

/// F(0..count-1).
std::vector<ExactInteger> fibonacci_prefix(std::size_t count);

/// B(k, n) using two rolling rows of length n+1.
ExactInteger binomiacci(std::size_t k, std::size_t n);

BinomiacciTable table(std::size_t max_k, std::size_t max_n);

/// B(n, n).
ExactInteger central(std::size_t n);

/// B(0,0), ..., B(n_max, n_max) from a single table fill.
std::vector<ExactInteger> central_sequence(std::size_t n_max);

/// Row m of the triangle: B(k, m-k) for k = 0..m.
std::vector<ExactInteger> triangle_row(std::size_t m);

}  // namespace binomiacci
