#include <doctest.h>

#include <cmath>

#include "binomiacci/diagonal.hpp"
#include "binomiacci/sequence.hpp"
#include "binomiacci/verify.hpp"

using namespace binomiacci;
using Complex = std::complex<double>;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

const double kSqrt5 = std::sqrt(5.0);

// P(z0)/Q'(z0) for F = P/Q, written out independently of the closed forms.
ResidueTriple residues_from_derivative(Complex s) {
  const auto numerator = [s](Complex z) { return z * (z - s - z * z + z * s - z * s * s); };
  const auto fixed = [](Complex z) { return 1.0 - z - z * z; };
  const PoleSet p = poles(s);
  ResidueTriple r;
  r.res1 = numerator(p.z1) / (fixed(p.z1) * (1.0 - 2.0 * p.z1) * (p.z1 * p.z1 - p.z1 * s - s * s));
  r.res2 = numerator(p.z2) / (fixed(p.z2) * (p.z2 - s - p.z2 * p.z2) * (2.0 * p.z2 - s));
  r.res3 = numerator(p.z3) / (fixed(p.z3) * (p.z3 - s - p.z3 * p.z3) * (2.0 * p.z3 - s));
  return r;
}

}  // namespace

TEST_CASE("eval_G") {
  CHECK(eval_G(0.0, 0.0) == Complex(1.0));

  const auto t = table(32, 32);
  double series = 0.0;
  for (std::size_t k = 0; k <= 32; ++k)
    for (std::size_t n = 0; n <= 32; ++n) series += t.at(k, n).convert_to<double>() * std::pow(0.1, double(k + n));
  CHECK(rel(eval_G(0.1, 0.1), series) < 1e-9);

  CHECK_THROWS_WITH_AS(eval_G(0.5, 0.5), "pole proximity", std::domain_error);
  const double golden = (kSqrt5 - 1.0) / 2.0;
  CHECK_THROWS_WITH_AS(eval_G(golden, 0.0), "pole proximity", std::domain_error);
}

TEST_CASE("eval_F") {
  // At s = 0, G(z, 0) = 1/(1-z-z^2) so F(z) = 1/(z (1-z-z^2)).
  const double z = 0.1;
  CHECK(rel(eval_F(z, 0.0), 1.0 / (z * (1.0 - z - z * z))) < 1e-14);
  CHECK(rel(eval_F(0.3, 0.05), eval_G(0.3, 0.05 / 0.3) / 0.3) < 1e-9);
  CHECK(rel(eval_F(Complex(0.2, -0.1), Complex(0.04, 0.03)),
            eval_G(Complex(0.2, -0.1), Complex(0.04, 0.03) / Complex(0.2, -0.1)) / Complex(0.2, -0.1)) < 1e-9);

  const PoleSet p = poles(0.1);
  CHECK_THROWS_WITH_AS(eval_F(p.z1, 0.1), "pole proximity", std::domain_error);
  CHECK_THROWS_AS(eval_F(0.0, 0.1), std::invalid_argument);
}

TEST_CASE("poles") {
  const PoleSet p = poles(0.1);
  CHECK(p.z1.real() == doctest::Approx((1.0 - std::sqrt(0.6)) / 2.0).epsilon(1e-14));
  CHECK(p.z1.real() == doctest::Approx(0.11270).epsilon(1e-4));
  CHECK(p.z2.real() == doctest::Approx(0.16180).epsilon(1e-4));
  CHECK(p.z3.real() == doctest::Approx(-0.06180).epsilon(1e-4));

  const PoleSet tiny = poles(1e-6);
  CHECK(std::abs(tiny.z1) < 2e-6);
  CHECK(std::abs(tiny.z2) < 2e-6);
  CHECK(std::abs(tiny.z3) < 2e-6);

  CHECK(poles(0.25).z1 == Complex(0.5, 0.0));
  CHECK_THROWS_WITH_AS(poles(0.0), "degenerate pole configuration", std::domain_error);
  // z1 and z2 meet at sqrt5 - 2.
  CHECK_THROWS_WITH_AS(poles(kSqrt5 - 2.0), "degenerate pole configuration", std::domain_error);
}

TEST_CASE("residues") {
  SUBCASE("s = 0") {
    const ResidueTriple r = residues(0.0);
    CHECK(std::abs(r.res1) == 0.0);
    CHECK(std::abs(r.res2 - 2.0 / (5.0 - kSqrt5)) < 1e-15);
    CHECK(std::abs(r.sum() - 1.0) < 1e-15);
  }
  SUBCASE("identity at s = 0.1") { CHECK(std::abs(residues(0.1).sum() - eval_C(0.1)) < 1e-10); }
  SUBCASE("numeric limits at s = 0.05") {
    const ResidueTriple closed = residues(0.05);
    const ResidueTriple numeric = numeric_residues(0.05);
    CHECK(rel(numeric.res1, closed.res1) < 1e-7);
    CHECK(rel(numeric.res2, closed.res2) < 1e-7);
    CHECK(rel(numeric.res3, closed.res3) < 1e-7);
  }
  SUBCASE("closed forms agree with P/Q' on the sample set") {
    for (const Complex s : sample_parameters(kResidueSampleCount, kSampleDiskRadius, kResidueSampleSeed)) {
      const ResidueTriple closed = residues(s);
      const ResidueTriple direct = residues_from_derivative(s);
      CHECK(rel(closed.res1, direct.res1) < 1e-10);
      CHECK(rel(closed.res2, direct.res2) < 1e-10);
      CHECK(rel(closed.res3, direct.res3) < 1e-10);
    }
  }
  SUBCASE("singular parameters") {
    CHECK_THROWS_WITH_AS(residues(0.25), "singular parameter", std::domain_error);
    CHECK_THROWS_WITH_AS(residues(kSqrt5 - 2.0), "singular parameter", std::domain_error);
    CHECK_THROWS_WITH_AS(residues(-kSqrt5 - 2.0), "singular parameter", std::domain_error);
  }
}

TEST_CASE("eval_C") {
  CHECK(eval_C(0.0) == Complex(1.0));

  const auto centrals = central_sequence(40);
  for (const Complex s : {Complex(0.1), Complex(-0.08, 0.05), Complex(0.0, 0.1)}) {
    Complex sum = 0.0;
    Complex power = 1.0;
    for (const auto& b : centrals) {
      sum += b.convert_to<double>() * power;
      power *= s;
    }
    CHECK(rel(eval_C(s), sum) < 1e-9);
  }

  CHECK_THROWS_WITH_AS(eval_C(0.25), "singular parameter", std::domain_error);

  SUBCASE("removable point sqrt5 - 2") {
    const double r = kSqrt5 - 2.0;
    CHECK_THROWS_WITH_AS(eval_C(r), "singular parameter", std::domain_error);
    const double left = eval_C(r - 1e-7).real();
    const double right = eval_C(r + 1e-7).real();
    CHECK(std::abs(left - right) / std::abs(left) < 1e-4);
    const double series = central_series_partial_sum(r, 1500);
    CHECK(std::abs(0.5 * (left + right) - series) / series < 1e-8);
  }
}

TEST_CASE("residue_identity_check") {
  for (const Complex s : {Complex(0.1), Complex(0.15, 0.05), Complex(0.2)}) {
    const ResidueReport report = residue_identity_check(s);
    CHECK(report.passed);
    CHECK(report.max_abs_error < 1e-10);
  }
  CHECK_THROWS_AS(residue_identity_check(0.0), std::domain_error);
}

TEST_CASE("principal branch is shared") {
  // Off the real axis, z1 from poles() and sqrt(1-4s) from residues() must sit on one sheet.
  const Complex s(0.12, -0.15);
  const PoleSet p = poles(s);
  CHECK(std::abs(1.0 - 2.0 * p.z1 - sqrt_one_minus_4s(s)) < 1e-15);
  CHECK(sqrt_one_minus_4s(s).real() > 0.0);
}

TEST_CASE("central_series_partial_sum agrees with exact coefficients") {
  const auto centrals = central_sequence(60);
  double direct = 0.0;
  for (std::size_t n = 0; n <= 60; ++n) direct += centrals[n].convert_to<double>() * std::pow(0.05, double(n));
  CHECK(std::abs(central_series_partial_sum(0.05, 60) - direct) / direct < 1e-13);
}
