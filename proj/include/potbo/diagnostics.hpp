#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "potbo/excess.hpp"
#include "potbo/fit.hpp"
#include "potbo/sample.hpp"

namespace potbo {

struct DiagnosticsConfig {
  std::size_t threshold_count = 50;  // grid between the two sample percentiles below
  double lo_percentile = 0.50;
  double hi_percentile = 0.99;
  double ci_level = 0.95;
  std::size_t min_mean_excess = 5;   // thresholds with fewer excesses are omitted
  std::size_t bins = 30;             // density-plot histogram bins
};

struct MeanExcessPoint {
  double u = 0.0;
  double mean = 0.0;
  double se = 0.0;
  std::size_t n = 0;
};

struct StabilityPoint {
  double u = 0.0;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
};

struct SkippedThreshold {
  double u = 0.0;
  std::string reason;
};

struct StabilitySeries {
  std::vector<StabilityPoint> xi;
  std::vector<StabilityPoint> sigma_star;
  std::vector<SkippedThreshold> skipped;
};

struct ProbabilityPoint {
  double empirical = 0.0;  // plotting position i/(k+1)
  double model = 0.0;      // fitted CDF at the i-th order statistic
};

struct QuantilePoint {
  double model = 0.0;      // u + fitted quantile at i/(k+1)
  double empirical = 0.0;  // u + i-th order statistic
};

struct ReturnLevelPoint {
  double m = 0.0;  // return period in observations
  double level = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct DensitySeries {
  std::vector<double> bin_lo, bin_hi;
  std::vector<double> hist;           // density-normalized histogram
  std::vector<double> fit_at_center;  // fitted GPD density at bin centers
  std::vector<double> curve_y, curve_f;  // fitted density on a fine grid
};

//! Regression summary quantifying how linear (or flat) a series is.
struct LinearitySummary {
  std::string series;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double u_lo = 0.0;  // fitted sub-range
  double u_hi = 0.0;
};

struct DiagnosticsBundle {
  std::vector<MeanExcessPoint> mean_excess;
  StabilitySeries stability;
  std::vector<LinearitySummary> linearity;
  std::vector<ProbabilityPoint> probability_plot;
  std::vector<QuantilePoint> quantile_plot;
  std::vector<ReturnLevelPoint> return_level;
  DensitySeries density;
};

//! Equally spaced thresholds between the configured sample percentiles.
std::vector<double> default_threshold_grid(const Sample& sample, const DiagnosticsConfig& cfg);

//! Mean excess and its standard error per threshold; thresholds with fewer
//! than min_n excesses are omitted. Empty result throws EmptyDataError.
std::vector<MeanExcessPoint> mean_excess_series(const Sample& sample,
                                                std::span<const double> thresholds,
                                                std::size_t min_n = 5);

//! Per-threshold MLE with normal CIs for xi and delta-method CIs for the
//! modified scale. Unfittable thresholds are recorded in `skipped`.
StabilitySeries stability_series(const Sample& sample, std::span<const double> thresholds,
                                 double ci_level = 0.95);

std::pair<std::vector<ProbabilityPoint>, std::vector<QuantilePoint>> probability_quantile_plots(
    const GpdFit& fit, const ExcessSet& e);

//! Return levels x_m over the given periods (m * zeta_u >= 1 retained),
//! with delta-method confidence bands over the (xi, sigma) covariance.
std::vector<ReturnLevelPoint> return_level_series(const GpdFit& fit,
                                                  std::span<const double> m_values,
                                                  double ci_level = 0.95);

//! Log-spaced default return periods spanning m*zeta_u in [1, 1e4].
std::vector<double> default_return_periods(const GpdFit& fit, std::size_t count = 50);

DensitySeries density_series(const GpdFit& fit, const ExcessSet& e, std::size_t bins);

//! Least-squares line over the central fraction of the u-range.
LinearitySummary linear_summary(const std::string& name, std::span<const double> us,
                                std::span<const double> values, double central_fraction = 0.8);

}  // namespace potbo
