#include "binomiacci/sequence.hpp"

#include <stdexcept>
#include <utility>

namespace binomiacci {

BinomiacciTable::BinomiacciTable(std::size_t max_k, std::size_t max_n)
    : max_k_(max_k), max_n_(max_n) {
  const auto fib = fibonacci_prefix(std::max(max_k, max_n) + 1);
  cells_.reserve(max_k + 1);
  cells_.emplace_back(fib.begin(), fib.begin() + static_cast<std::ptrdiff_t>(max_n + 1));
  for (std::size_t k = 1; k <= max_k; ++k) {
    const auto& above = cells_.back();
    std::vector<ExactInteger> row(max_n + 1);
    row[0] = fib[k];
    for (std::size_t n = 1; n <= max_n; ++n) row[n] = row[n - 1] + above[n];
    cells_.push_back(std::move(row));
  }
}

const ExactInteger& BinomiacciTable::at(std::size_t k, std::size_t n) const {
  if (k > max_k_ || n > max_n_) throw std::out_of_range("BinomiacciTable index out of range");
  return cells_[k][n];
}

std::vector<ExactInteger> fibonacci_prefix(std::size_t count) {
  std::vector<ExactInteger> fib;
  fib.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    fib.push_back(j < 2 ? ExactInteger(1) : fib[j - 1] + fib[j - 2]);
  }
  return fib;
}

ExactInteger fibonacci(std::size_t j) {
  ExactInteger previous = 1;
  ExactInteger current = 1;
  for (std::size_t i = 1; i < j; ++i) {
    previous += current;
    std::swap(previous, current);
  }
  return current;
}

ExactInteger binomiacci(std::size_t k, std::size_t n) {
  // The table is symmetric; roll along the shorter side.
  if (n > k) std::swap(k, n);
  std::vector<ExactInteger> row = fibonacci_prefix(n + 1);
  ExactInteger boundary_prev = 1;  // F(j-1)
  ExactInteger boundary = 1;       // F(j)
  for (std::size_t j = 1; j <= k; ++j) {
    row[0] = boundary;
    for (std::size_t i = 1; i <= n; ++i) row[i] += row[i - 1];
    boundary_prev += boundary;
    std::swap(boundary_prev, boundary);
  }
  return row[n];
}

BinomiacciTable table(std::size_t max_k, std::size_t max_n) {
  return BinomiacciTable(max_k, max_n);
}

ExactInteger central(std::size_t n) { return binomiacci(n, n); }

std::vector<ExactInteger> central_sequence(std::size_t n_max) {
  // One rolling row; row k is complete through column n_max when B(k,k) is read.
  const auto fib = fibonacci_prefix(n_max + 1);
  std::vector<ExactInteger> row(fib);
  std::vector<ExactInteger> diagonal{row[0]};
  diagonal.reserve(n_max + 1);
  for (std::size_t k = 1; k <= n_max; ++k) {
    row[0] = fib[k];
    for (std::size_t n = 1; n <= n_max; ++n) row[n] += row[n - 1];
    diagonal.push_back(row[k]);
  }
  return diagonal;
}

std::vector<ExactInteger> triangle_row(std::size_t m) {
  // Row k only needs columns 0..m-k.
  const auto fib = fibonacci_prefix(m + 1);
  std::vector<ExactInteger> row(fib);
  std::vector<ExactInteger> result{row[m]};
  result.reserve(m + 1);
  for (std::size_t k = 1; k <= m; ++k) {
    row[0] = fib[k];
    for (std::size_t n = 1; n <= m - k; ++n) row[n] += row[n - 1];
    result.push_back(row[m - k]);
  }
  return result;
}

}  // namespace binomiacci
