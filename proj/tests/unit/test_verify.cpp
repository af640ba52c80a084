#include <doctest.h>

#include <cmath>

#include "binomiacci/diagonal.hpp"
#include "binomiacci/verify.hpp"

using namespace binomiacci;

TEST_CASE("every suite passes") {
  for (const Suite suite : {Suite::recurrence, Suite::gf, Suite::diagonal, Suite::residues, Suite::asymptotics}) {
    const auto results = run_suite(suite);
    CHECK(!results.empty());
    for (const auto& r : results) {
      INFO(r.suite << ": " << r.name << " measured " << r.measured);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("suite names") {
  CHECK(parse_suite("gf") == Suite::gf);
  CHECK(parse_suite("all") == Suite::all);
  CHECK(!parse_suite("GF").has_value());
  CHECK(suite_name(Suite::residues) == "residues");
}

TEST_CASE("sample parameters are deterministic and valid") {
  const auto a = sample_parameters(kResidueSampleCount, kSampleDiskRadius, kResidueSampleSeed);
  const auto b = sample_parameters(kResidueSampleCount, kSampleDiskRadius, kResidueSampleSeed);
  REQUIRE(a.size() == kResidueSampleCount);
  CHECK(a == b);
  const double removable = std::sqrt(5.0) - 2.0;
  for (const auto s : a) {
    CHECK(std::abs(s) <= kSampleDiskRadius);
    CHECK(std::abs(s) >= kSampleExclusion);
    CHECK(std::abs(s - removable) >= kSampleExclusion);
    CHECK_NOTHROW(poles(s));
  }
  CHECK(sample_parameters(5, kSampleDiskRadius, 1) != sample_parameters(5, kSampleDiskRadius, 2));
}
