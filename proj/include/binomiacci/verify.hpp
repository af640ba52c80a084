#pragma once

// Cross-checks between the recurrence, the generating functions, the residue
// computation and the asymptotic estimate. Each check reports the worst error
// it measured so failures can be diagnosed from the report alone.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binomiacci {

enum class Suite { all, recurrence, gf, diagonal, residues, asymptotics };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Largest error seen (a mismatch count for exact checks).
  double measured = 0.0;
  double tolerance = 0.0;
};

std::vector<CheckResult> run_suite(Suite suite);

inline constexpr std::uint64_t kResidueSampleSeed = 0x42696e6f6d696163ULL;
inline constexpr std::uint64_t kDecompositionSampleSeed = 0x4465636f6d706f73ULL;
inline constexpr std::size_t kResidueSampleCount = 50;
inline constexpr std::size_t kDecompositionSampleCount = 20;
inline constexpr double kSampleDiskRadius = 0.2;
/// Samples closer than this to 0 or sqrt5 - 2 are redrawn.
inline constexpr double kSampleExclusion = 1e-3;

/// Deterministic points in |s| <= radius, avoiding the excluded neighbourhoods
/// and degenerate pole configurations.
std::vector<std::complex<double>> sample_parameters(std::size_t count, double radius, std::uint64_t seed);

/// Reference values: approximation and ratio columns of the published
/// comparison table for n = 1..15.
inline constexpr double kReferenceEstimates[15] = {6.77,    19.15,   62.54,    216.65,   775.1,
                                                   2830.3,  10481.4, 39217.6,  147899,   561237,
                                                   2140470, 8197390, 31503200, 121429000, 469246000};
inline constexpr double kReferenceRatios[15] = {3.385, 2.39, 2.08, 1.9,  1.77,  1.688, 1.62, 1.56,
                                                1.52,  1.48, 1.45, 1.425, 1.4,  1.38,  1.36};
inline constexpr const char* kReferenceCentral[15] = {
    "2",       "8",       "30",       "114",      "436",      "1676",      "6468",     "25040",
    "97190",   "378050",  "1473254",  "5750390",  "22476090", "87958306",  "344593314"};

/// sum_{n <= terms} B(n,n) s^n for a real s in (0, 1/4), evaluated with the
/// scaled recurrence a(k,n) = B(k,n) s^{k+n} so nothing overflows.
double central_series_partial_sum(double s, std::size_t terms);

}  // namespace binomiacci
