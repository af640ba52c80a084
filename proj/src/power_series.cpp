#include "binomiacci/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "binomiacci/sequence.hpp"

namespace binomiacci {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::initializer_list<ExactRational> coeffs,
                                            std::size_t order) {
  std::vector<ExactRational> c(coeffs);
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("cannot raise the order of a truncated series");
  return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + new_order + 1),
                         new_order);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries result(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= result.order(); ++i) result[i] = a[i] + b[i];
  return result;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries result(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= result.order(); ++i) result[i] = a[i] - b[i];
  return result;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRational& factor) {
  TruncatedSeries result(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) result[i] = a[i] * factor;
  return result;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries result(std::min(a.order(), b.order()));
  const std::size_t order = result.order();
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] != 0) result[i + j] += a[i] * b[j];
    }
  }
  return result;
}

TruncatedSeries series_inverse(const TruncatedSeries& a, std::size_t order) {
  if (a[0] == 0) throw std::domain_error("not invertible");
  TruncatedSeries b(order);
  b[0] = 1 / a[0];
  for (std::size_t n = 1; n <= order; ++n) {
    ExactRational acc = 0;
    for (std::size_t i = 1; i <= std::min(n, a.order()); ++i) {
      if (a[i] != 0) acc += a[i] * b[n - i];
    }
    b[n] = -acc * b[0];
  }
  return b;
}

TruncatedSeries series_sqrt(const TruncatedSeries& a, std::size_t order) {
  if (a[0] != 1) throw std::domain_error("sqrt requires unit constant term");
  // Match coefficients of b*b = a: 2 b_n = a_n - sum_{i=1}^{n-1} b_i b_{n-i}.
  TruncatedSeries b(order);
  b[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    ExactRational acc = n <= a.order() ? a[n] : ExactRational(0);
    for (std::size_t i = 1; i < n; ++i) acc -= b[i] * b[n - i];
    b[n] = acc / 2;
  }
  return b;
}

TruncatedSeries fibonacci_gf(std::size_t order) {
  return series_inverse(TruncatedSeries::polynomial({1, -1, -1}, order), order);
}

namespace {

// Multiplication by 1/(1-z) is a running sum.
TruncatedSeries divide_by_one_minus_z(TruncatedSeries a) {
  for (std::size_t i = 1; i <= a.order(); ++i) a[i] += a[i - 1];
  return a;
}

}  // namespace

TruncatedSeries row_gf(std::size_t k, std::size_t order) {
  TruncatedSeries row = fibonacci_gf(order);
  ExactInteger fib_previous = 0;  // F(j-1), with F(-1) = 0
  ExactInteger fib_current = 1;   // F(j)
  for (std::size_t j = 0; j < k; ++j) {
    row[0] += ExactRational(fib_previous);
    row = divide_by_one_minus_z(std::move(row));
    fib_previous += fib_current;
    std::swap(fib_previous, fib_current);
  }
  return row;
}

TruncatedSeries row_gf_closed_form(std::size_t k, std::size_t order) {
  const TruncatedSeries one_minus_z = TruncatedSeries::polynomial({1, -1}, order);
  const TruncatedSeries geometric = series_inverse(one_minus_z, order);

  // powers[m] = (1-z)^{-m}
  std::vector<TruncatedSeries> powers{TruncatedSeries::one(order)};
  for (std::size_t m = 1; m <= k; ++m) powers.push_back(series_mul(powers.back(), geometric));

  TruncatedSeries result = series_mul(powers[k], fibonacci_gf(order));
  if (k >= 2) {
    const auto fib = fibonacci_prefix(k - 1);
    for (std::size_t i = 0; i + 2 <= k; ++i) {
      result = series_add(result, series_scale(powers[k - 1 - i], ExactRational(fib[i])));
    }
  }
  return result;
}

TruncatedSeries central_gf(std::size_t order) {
  const TruncatedSeries s = TruncatedSeries::polynomial({0, 1}, order);
  const TruncatedSeries root = series_sqrt(TruncatedSeries::polynomial({1, -4}, order), order);
  const TruncatedSeries numerator =
      series_mul(TruncatedSeries::polynomial({-1, 1}, order), series_sub(root, s));
  const TruncatedSeries denominator =
      series_mul(TruncatedSeries::polynomial({-1, 4, 1}, order), root);
  return series_mul(numerator, series_inverse(denominator, order));
}

BivariateSeries::BivariateSeries(std::size_t max_k, std::size_t max_n)
    : max_k_(max_k), max_n_(max_n), coeffs_((max_k + 1) * (max_n + 1)) {}

BivariateSeries BivariateSeries::one(std::size_t max_k, std::size_t max_n) {
  BivariateSeries g(max_k, max_n);
  g.at(0, 0) = 1;
  return g;
}

namespace {

struct Term {
  std::size_t k;
  std::size_t n;
  const ExactRational* value;
};

std::vector<Term> nonzero_terms(const BivariateSeries& g, std::size_t max_k, std::size_t max_n) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k <= max_k; ++k) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      if (g.at(k, n) != 0) terms.push_back({k, n, &g.at(k, n)});
    }
  }
  return terms;
}

// Sets the in-range coefficients listed as {k, n, value}.
BivariateSeries bivariate_polynomial(std::size_t max_k, std::size_t max_n,
                                     std::initializer_list<std::pair<std::pair<std::size_t, std::size_t>, int>> terms) {
  BivariateSeries g(max_k, max_n);
  for (const auto& [index, value] : terms) {
    if (index.first <= max_k && index.second <= max_n) g.at(index.first, index.second) = value;
  }
  return g;
}

}  // namespace

BivariateSeries bivariate_mul(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries result(std::min(a.max_k(), b.max_k()), std::min(a.max_n(), b.max_n()));
  const std::size_t max_k = result.max_k();
  const std::size_t max_n = result.max_n();
  const auto a_terms = nonzero_terms(a, max_k, max_n);
  const auto b_terms = nonzero_terms(b, max_k, max_n);
  for (const Term& x : a_terms) {
    for (const Term& y : b_terms) {
      if (x.k + y.k <= max_k && x.n + y.n <= max_n) {
        result.at(x.k + y.k, x.n + y.n) += *x.value * *y.value;
      }
    }
  }
  return result;
}

BivariateSeries bivariate_inverse(const BivariateSeries& a) {
  if (a.at(0, 0) == 0) throw std::domain_error("not invertible");
  const ExactRational inverse_constant = 1 / a.at(0, 0);
  auto terms = nonzero_terms(a, a.max_k(), a.max_n());
  std::erase_if(terms, [](const Term& t) { return t.k == 0 && t.n == 0; });

  BivariateSeries b(a.max_k(), a.max_n());
  for (std::size_t k = 0; k <= a.max_k(); ++k) {
    for (std::size_t n = 0; n <= a.max_n(); ++n) {
      if (k == 0 && n == 0) {
        b.at(0, 0) = inverse_constant;
        continue;
      }
      ExactRational acc = 0;
      for (const Term& t : terms) {
        if (t.k <= k && t.n <= n) acc += *t.value * b.at(k - t.k, n - t.n);
      }
      b.at(k, n) = -acc * inverse_constant;
    }
  }
  return b;
}

BivariateSeries bivariate_gf(std::size_t max_k, std::size_t max_n) {
  // Index pairs are {power of w, power of z}.
  const auto numerator = bivariate_polynomial(
      max_k, max_n, {{{0, 0}, 1}, {{0, 1}, -1}, {{1, 0}, -1}, {{1, 1}, 1}, {{2, 2}, -1}});
  const auto z_factor = bivariate_polynomial(max_k, max_n, {{{0, 0}, 1}, {{0, 1}, -1}, {{0, 2}, -1}});
  const auto w_factor = bivariate_polynomial(max_k, max_n, {{{0, 0}, 1}, {{1, 0}, -1}, {{2, 0}, -1}});
  const auto mixed_factor = bivariate_polynomial(max_k, max_n, {{{0, 0}, 1}, {{0, 1}, -1}, {{1, 0}, -1}});

  // Multiply the dense factor first so the later products stay sparse x dense.
  BivariateSeries g = bivariate_mul(numerator, bivariate_inverse(mixed_factor));
  g = bivariate_mul(bivariate_inverse(z_factor), g);
  g = bivariate_mul(bivariate_inverse(w_factor), g);
  return g;
}

TruncatedSeries diagonal_of(const BivariateSeries& g) {
  TruncatedSeries d(std::min(g.max_k(), g.max_n()));
  for (std::size_t n = 0; n <= d.order(); ++n) d[n] = g.at(n, n);
  return d;
}

TruncatedSeries diagonal_of(const BivariateSeries& g, std::size_t order) {
  if (order > std::min(g.max_k(), g.max_n())) {
    throw std::invalid_argument("grid too small for the requested diagonal order");
  }
  return diagonal_of(g).truncated(order);
}

}  // namespace binomiacci
