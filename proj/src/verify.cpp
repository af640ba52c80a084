#include "binomiacci/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "binomiacci/asymptotics.hpp"
#include "binomiacci/diagonal.hpp"
#include "binomiacci/power_series.hpp"
#include "binomiacci/sequence.hpp"

namespace binomiacci {

namespace {

using Complex = std::complex<double>;

const double kRemovablePoint = std::sqrt(5.0) - 2.0;

constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuiteNames{{
    {Suite::all, "all"},
    {Suite::recurrence, "recurrence"},
    {Suite::gf, "gf"},
    {Suite::diagonal, "diagonal"},
    {Suite::residues, "residues"},
    {Suite::asymptotics, "asymptotics"},
}};

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void exact(std::string name, std::size_t mismatches) {
    results_.push_back({suite_, std::move(name), mismatches == 0, static_cast<double>(mismatches), 0.0});
  }

  void numeric(std::string name, double error, double tolerance) {
    results_.push_back({suite_, std::move(name), error < tolerance, error, tolerance});
  }

  /// A check that threw counts as failed.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception&) {
      results_.push_back({suite_, name + " (threw)", false, INFINITY, 0.0});
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

double relative_error(Complex value, Complex reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// ---------------------------------------------------------------- recurrence

std::vector<CheckResult> recurrence_suite() {
  constexpr std::size_t kLimit = 64;
  Recorder rec("recurrence");
  const BinomiacciTable t = table(kLimit, kLimit);
  const auto fib = fibonacci_prefix(kLimit + 1);

  std::size_t bad = 0;
  for (std::size_t k = 0; k <= kLimit; ++k)
    for (std::size_t n = 0; n <= kLimit; ++n) bad += t.at(k, n) != t.at(n, k);
  rec.exact("symmetry B(k,n) = B(n,k), k,n <= 64", bad);

  bad = 0;
  for (std::size_t j = 0; j <= kLimit; ++j) bad += (t.at(0, j) != fib[j]) + (t.at(j, 0) != fib[j]);
  rec.exact("boundary equals Fibonacci, index <= 64", bad);

  bad = 0;
  for (std::size_t k = 1; k <= kLimit; ++k)
    for (std::size_t n = 1; n <= kLimit; ++n) bad += t.at(k, n) - t.at(k, n - 1) - t.at(k - 1, n) != 0;
  rec.exact("recurrence closure, 1 <= k,n <= 64", bad);

  bad = 0;
  for (std::size_t k = 1; k <= kLimit; ++k)
    for (std::size_t n = 1; n <= kLimit; ++n) bad += !(t.at(k, n) > t.at(k, n - 1)) + !(t.at(n, k) > t.at(n - 1, k));
  rec.exact("strict monotonicity along rows and columns", bad);

  bad = 0;
  for (std::size_t m = 0; m <= 32; ++m) {
    const auto row = triangle_row(m);
    for (std::size_t k = 0; k <= m; ++k) bad += (row[k] != t.at(k, m - k)) + (row[k] != row[m - k]);
  }
  rec.exact("triangle rows match the table and are palindromic, m <= 32", bad);

  bad = 0;
  for (std::size_t k = 0; k <= kLimit; k += 7)
    for (std::size_t n = 0; n <= kLimit; n += 5) bad += binomiacci(k, n) != t.at(k, n);
  bad += fibonacci(kLimit) != fib[kLimit];
  rec.exact("rolling-row evaluation agrees with the full table", bad);

  return rec.take();
}

// ---------------------------------------------------------------------- gf

std::size_t count_mismatches(const TruncatedSeries& series, const std::function<ExactInteger(std::size_t)>& oracle) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i <= series.order(); ++i) bad += series[i] != ExactRational(oracle(i));
  return bad;
}

std::size_t non_unit_terms(const TruncatedSeries& s) {
  std::size_t bad = s[0] != 1;
  for (std::size_t i = 1; i <= s.order(); ++i) bad += s[i] != 0;
  return bad;
}

std::vector<CheckResult> gf_suite() {
  constexpr std::size_t kOrder = 64;
  Recorder rec("gf");
  const BinomiacciTable t = table(kOrder, kOrder);

  std::size_t bad = 0;
  std::size_t closed_form_bad = 0;
  std::size_t non_integral = 0;
  std::vector<TruncatedSeries> rows;
  for (std::size_t k = 0; k <= 16; ++k) {
    rows.push_back(row_gf(k, kOrder));
    bad += count_mismatches(rows.back(), [&](std::size_t n) { return t.at(k, n); });
    closed_form_bad += rows.back() != row_gf_closed_form(k, kOrder);
    for (const auto& c : rows.back().coeffs()) non_integral += !is_integral(c);
  }
  rec.exact("row_gf(k, 64) equals the recurrence, k <= 16", bad);
  rec.exact("row_gf recursion equals the partial-fraction closed form, k <= 16", closed_form_bad);

  bad = 0;
  const TruncatedSeries one_minus_z = TruncatedSeries::polynomial({1, -1}, kOrder);
  for (std::size_t k = 1; k <= 15; ++k) {
    TruncatedSeries residual = series_sub(series_mul(one_minus_z, rows[k + 1]), rows[k]);
    residual[0] -= ExactRational(fibonacci(k - 1));
    for (const auto& c : residual.coeffs()) bad += c != 0;
  }
  rec.exact("(1-z) A_{k+1} - A_k - F(k-1) = 0, 1 <= k <= 15", bad);

  const BivariateSeries g = bivariate_gf(32, 32);
  bad = 0;
  for (std::size_t k = 0; k <= 32; ++k)
    for (std::size_t n = 0; n <= 32; ++n) {
      bad += g.at(k, n) != ExactRational(t.at(k, n));
      non_integral += !is_integral(g.at(k, n));
    }
  rec.exact("bivariate_gf(32, 32) equals the table", bad);

  const TruncatedSeries c = central_gf(kOrder);
  rec.exact("central_gf(64) equals B(n,n), n <= 64", count_mismatches(c, [&](std::size_t n) { return t.at(n, n); }));
  for (const auto& x : c.coeffs()) non_integral += !is_integral(x);
  rec.exact("every generating-function coefficient is an integer", non_integral);

  rec.exact("diagonal_of(bivariate_gf(32, 32)) equals central_gf(32)",
            diagonal_of(g) != c.truncated(32) ? 1 : 0);

  bad = 0;
  const std::vector<TruncatedSeries> invertible{
      TruncatedSeries::polynomial({1, -1, -1}, kOrder),
      TruncatedSeries::polynomial({-1, 4, 1}, kOrder),
      TruncatedSeries::polynomial({3, ExactRational(1, 2), 0, -7}, kOrder),
      rows[5],
  };
  for (const auto& a : invertible) bad += non_unit_terms(series_mul(series_inverse(a, kOrder), a));
  rec.exact("series_inverse(a) * a = 1 at order 64", bad);

  const TruncatedSeries radicand = TruncatedSeries::polynomial({1, -4}, kOrder);
  const TruncatedSeries root = series_sqrt(radicand, kOrder);
  rec.exact("sqrt(1-4s)^2 = 1-4s at order 64", series_mul(root, root) != radicand ? 1 : 0);

  rec.exact("(1-z-z^2) A_0 = 1 at order 64",
            non_unit_terms(series_mul(TruncatedSeries::polynomial({1, -1, -1}, kOrder), rows[0])));

  return rec.take();
}

// ---------------------------------------------------------------- diagonal

std::vector<CheckResult> diagonal_suite() {
  Recorder rec("diagonal");

  rec.guarded("eval_G matches the order-32 bivariate series at (0.1, 0.1)", [&] {
    const BinomiacciTable t = table(32, 32);
    double series = 0.0;
    for (std::size_t k = 0; k <= 32; ++k)
      for (std::size_t n = 0; n <= 32; ++n) series += t.at(k, n).convert_to<double>() * std::pow(0.1, double(k + n));
    rec.numeric("eval_G matches the order-32 bivariate series at (0.1, 0.1)",
                relative_error(eval_G(0.1, 0.1), series), 1e-9);
  });

  rec.guarded("eval_F(z, s) = eval_G(z, s/z)/z", [&] {
    double worst = 0.0;
    const std::array<std::pair<Complex, Complex>, 4> points{{
        {0.3, 0.05}, {Complex(0.2, 0.1), Complex(0.03, -0.02)}, {-0.25, 0.1}, {Complex(0, 0.4), Complex(0.1, 0.1)}}};
    for (const auto& [z, s] : points) worst = std::max(worst, relative_error(eval_F(z, s), eval_G(z, s / z) / z));
    rec.numeric("eval_F(z, s) = eval_G(z, s/z)/z", worst, 1e-9);
  });

  rec.guarded("eval_C matches sum_{n<=40} B(n,n) s^n for |s| <= 0.1", [&] {
    const auto centrals = central_sequence(40);
    double worst = 0.0;
    const std::array<Complex, 5> points{Complex(0.1, 0), Complex(-0.1, 0), Complex(0.05, 0.05), Complex(0, 0.1),
                                        Complex(-0.03, -0.07)};
    for (const Complex s : points) {
      Complex sum = 0.0;
      Complex power = 1.0;
      for (const auto& b : centrals) {
        sum += b.convert_to<double>() * power;
        power *= s;
      }
      worst = std::max(worst, relative_error(eval_C(s), sum));
    }
    rec.numeric("eval_C matches sum_{n<=40} B(n,n) s^n for |s| <= 0.1", worst, 1e-9);
  });

  rec.guarded("poles satisfy their defining factors", [&] {
    double worst = 0.0;
    for (const Complex s : sample_parameters(10, kSampleDiskRadius, kResidueSampleSeed)) {
      const PoleSet p = poles(s);
      worst = std::max({worst, std::abs(p.z1 - s - p.z1 * p.z1), std::abs(p.z2 * p.z2 - p.z2 * s - s * s),
                        std::abs(p.z3 * p.z3 - p.z3 * s - s * s)});
    }
    rec.numeric("poles satisfy their defining factors", worst, 1e-14);
  });

  return rec.take();
}

// ---------------------------------------------------------------- residues

std::vector<CheckResult> residues_suite() {
  Recorder rec("residues");
  const auto samples = sample_parameters(kResidueSampleCount, kSampleDiskRadius, kResidueSampleSeed);

  rec.guarded("Res1 + Res2 + Res3 = C(s) at 50 seeded points", [&] {
    double worst = 0.0;
    for (const Complex s : samples) worst = std::max(worst, residue_identity_check(s).max_abs_error);
    rec.numeric("Res1 + Res2 + Res3 = C(s) at 50 seeded points", worst, kResidueIdentityTolerance);
  });

  rec.guarded("closed-form residues match numeric limits", [&] {
    double worst = 0.0;
    for (const Complex s : samples) {
      const ResidueTriple closed = residues(s);
      const ResidueTriple numeric = numeric_residues(s);
      worst = std::max({worst, relative_error(numeric.res1, closed.res1), relative_error(numeric.res2, closed.res2),
                        relative_error(numeric.res3, closed.res3)});
    }
    rec.numeric("closed-form residues match numeric limits", worst, 1e-7);
  });

  rec.guarded("residue sum at s = 0 equals C(0) = 1", [&] {
    rec.numeric("residue sum at s = 0 equals C(0) = 1", std::abs(residues(0.0).sum() - 1.0), 1e-15);
  });

  return rec.take();
}

// ------------------------------------------------------------- asymptotics

std::vector<CheckResult> asymptotics_suite() {
  Recorder rec("asymptotics");
  const CentralDecomposition decomposition = decompose_C();

  rec.exact("g(1/4) = 3 by exact rational evaluation", decomposition.g_at_alpha_exact != 3 ? 1 : 0);
  rec.exact("(sqrt5-2)^2 = 9-4 sqrt5 and sqrt5-2 is a root of s^2+4s-1",
            removable_singularity_witness().holds() ? 0 : 1);

  rec.guarded("C has a finite two-sided limit at sqrt5-2 matching its series", [&] {
    constexpr double kStep = 1e-7;
    const double left = eval_C(kRemovablePoint - kStep).real();
    const double right = eval_C(kRemovablePoint + kStep).real();
    const double series = central_series_partial_sum(kRemovablePoint, 1500);
    rec.numeric("C has a finite two-sided limit at sqrt5-2 matching its series",
                std::abs(0.5 * (left + right) - series) / std::abs(series), 1e-8);
  });

  rec.guarded("f0 + g/sqrt(1-4s) = C(s) at 20 seeded points", [&] {
    double worst = 0.0;
    for (const Complex s : sample_parameters(kDecompositionSampleCount, kSampleDiskRadius, kDecompositionSampleSeed))
      worst = std::max(worst, std::abs(eval_decomposition(s) - eval_C(s)));
    rec.numeric("f0 + g/sqrt(1-4s) = C(s) at 20 seeded points", worst, 1e-10);
  });

  const std::array<AlgebraicSingularity, 1> dominant{decomposition.singularity};
  double worst = 0.0;
  for (std::size_t n = 1; n <= 100; ++n) {
    const double coarse = coarse_estimate(n);
    worst = std::max(worst, std::abs(algebraic_estimate(dominant, n) - coarse) / coarse);
  }
  rec.numeric("coarse estimate = general estimate, n <= 100", worst, 1e-12);

  std::size_t non_finite = 0;
  for (std::size_t n = 1; n <= 10000; ++n) {
    non_finite += !std::isfinite(algebraic_estimate_log(dominant, n).log_abs) + !std::isfinite(coarse_estimate_log(n).log_abs);
  }
  rec.exact("log-space estimates are finite up to n = 10000", non_finite);

  const auto rows = ratio_table(200);
  std::size_t exact_bad = 0;
  double estimate_error = 0.0;
  double ratio_error = 0.0;
  for (std::size_t i = 0; i < 15; ++i) {
    exact_bad += rows[i].exact != ExactInteger(kReferenceCentral[i]);
    estimate_error = std::max(estimate_error, std::abs(rows[i].estimate - kReferenceEstimates[i]) / kReferenceEstimates[i]);
    ratio_error = std::max(ratio_error, std::abs(rows[i].ratio - kReferenceRatios[i]));
  }
  rec.exact("reference central values, n = 1..15", exact_bad);
  rec.numeric("reference estimates within 0.1% relative, n = 1..15", estimate_error, 1e-3);
  rec.numeric("reference ratios within 0.01, n = 1..15", ratio_error, 0.01);

  std::size_t not_decreasing = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) not_decreasing += !(rows[i].ratio < rows[i - 1].ratio);
  not_decreasing += !(rows[199].ratio < rows[14].ratio);
  rec.exact("ratio strictly decreasing for n = 1..200", not_decreasing);

  return rec.take();
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [suite, text] : kSuiteNames) {
    if (text == name) return suite;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  for (const auto& [s, text] : kSuiteNames) {
    if (s == suite) return text;
  }
  return "unknown";
}

std::vector<CheckResult> run_suite(Suite suite) {
  switch (suite) {
    case Suite::recurrence: return recurrence_suite();
    case Suite::gf: return gf_suite();
    case Suite::diagonal: return diagonal_suite();
    case Suite::residues: return residues_suite();
    case Suite::asymptotics: return asymptotics_suite();
    case Suite::all: break;
  }
  std::vector<CheckResult> all;
  for (const Suite s : {Suite::recurrence, Suite::gf, Suite::diagonal, Suite::residues, Suite::asymptotics}) {
    auto part = run_suite(s);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

std::vector<std::complex<double>> sample_parameters(std::size_t count, double radius, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  // Built from raw engine output so the sequence does not depend on the
  // standard library's distribution implementation.
  const auto unit = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  std::vector<std::complex<double>> points;
  points.reserve(count);
  while (points.size() < count) {
    const double r = radius * std::sqrt(unit());
    const double theta = 2.0 * std::numbers::pi * unit();
    const std::complex<double> s = std::polar(r, theta);
    if (std::abs(s) < kSampleExclusion || std::abs(s - kRemovablePoint) < kSampleExclusion) continue;
    try {
      poles(s);
    } catch (const std::domain_error&) {
      continue;
    }
    points.push_back(s);
  }
  return points;
}

double central_series_partial_sum(double s, std::size_t terms) {
  if (!(s > 0.0 && s < 0.25)) throw std::invalid_argument("central_series_partial_sum requires 0 < s < 1/4");
  // scaled[k][n] = B(k,n) t^{k+n} with t = sqrt(s), so the diagonal carries s^n and nothing overflows.
  const double t = std::sqrt(s);
  std::vector<double> boundary(terms + 1);
  boundary[0] = 1.0;
  if (terms >= 1) boundary[1] = t;
  for (std::size_t j = 2; j <= terms; ++j) boundary[j] = t * boundary[j - 1] + t * t * boundary[j - 2];

  std::vector<double> row(boundary);
  double sum = row[0];
  for (std::size_t k = 1; k <= terms; ++k) {
    row[0] = boundary[k];
    for (std::size_t n = 1; n <= terms; ++n) row[n] = t * row[n - 1] + t * row[n];
    sum += row[k];
  }
  return sum;
}

}  // namespace binomiacci
