#pragma once

#include <cstdint>
#include <vector>

#include "negbeta/gaps.hpp"
#include "negbeta/map.hpp"

namespace negbeta {

struct SeriesValue {
  Value value;
  double tail_bound;  // |true density - value| <= tail_bound
};

// Sum over 0 <= n <= n_terms with T^n(1) >= x of (-beta)^-n. The n = 0 term
// (T^0(1) = 1 >= x) is included, which makes the sum a genuine density.
SeriesValue density_series(const Base& beta, const Value& x, std::size_t n_terms);
SeriesValue density_series(const OrbitRecord& orbit, const Value& x, std::size_t n_terms);

// Uniform bins [i/N, (i+1)/N) on (0,1], the last one closed at 1.
struct BinnedDensity {
  std::vector<double> values;  // density (mass / bin width), integrates to 1
  double normalization = 1.0;  // raw integral before normalizing
};

// Bin averages of the normalized series density.
BinnedDensity series_profile(const OrbitRecord& orbit, std::size_t bins, std::size_t n_terms);

struct UlamOptions {
  std::size_t bins = 4096;
  std::size_t power_iters = 200000;
  double tolerance = 1e-10;
  unsigned threads = 1;
  // Add the gap endpoints as extra cell boundaries, so no cell straddles a
  // gap; densities are still reported on the uniform bins.
  bool adapt_to_gaps = true;
};

// Stationary vector of the Ulam discretization of T_{-beta}, by power
// iteration of the lazy chain (P + I) / 2. Throws ConvergenceFailure.
BinnedDensity ulam_estimate(const Base& beta, const UlamOptions& opts);

// Visit counts of x_1 .. x_iters in long double arithmetic, with a 2^-61
// perturbation per step seeded from x0 (a pseudo-orbit).
std::vector<std::uint64_t> birkhoff_histogram(const Base& beta, long double x0, std::size_t iters,
                                              std::size_t bins);
BinnedDensity birkhoff_density(const Base& beta, long double x0, std::size_t iters, std::size_t bins);

struct CrossValidationOptions {
  std::size_t bins = 4096;
  std::size_t birkhoff_iters = 1000000;
  std::size_t series_terms = 400;
  std::uint64_t seed = 1;
  double discrepancy_tolerance = 0.05;
  double gap_mass_tolerance = 1e-3;
  unsigned threads = 1;
  bool ulam_adapt_to_gaps = true;
};

struct CrossValidationReport {
  std::size_t gap_count = 0;
  std::size_t support_bins = 0;
  double gap_mass_series = 0, gap_mass_ulam = 0, gap_mass_birkhoff = 0;
  // Largest |CDF_a - CDF_b| at the right edges of support bins.
  double cdf_series_ulam = 0, cdf_series_birkhoff = 0, cdf_ulam_birkhoff = 0;
  // Largest |h_a - h_b| on support bins, relative to max h of the series.
  double density_series_ulam = 0, density_series_birkhoff = 0;
  bool pass = false;
};

CrossValidationReport cross_validate(const Base& beta, const CrossValidationOptions& opts = {});

}  // namespace negbeta
