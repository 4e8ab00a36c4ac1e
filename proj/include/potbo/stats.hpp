#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace potbo::stats {

double mean(std::span<const double> xs);
//! Sample variance (n-1 denominator); requires at least two values.
double variance(std::span<const double> xs);
double stddev(std::span<const double> xs);

//! Quantile by linear interpolation between order statistics, p in [0,1].
double percentile_sorted(std::span<const double> sorted, double p);
double percentile(std::span<const double> xs, double p);
double interquartile_range(std::span<const double> xs);

//! Standard normal density, CDF (via erfc) and quantile (Acklam's
//! rational approximation with one Halley refinement).
double norm_pdf(double z);
double norm_cdf(double z);
double norm_quantile(double p);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

//! Ordinary least squares of ys on xs.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

//! Trapezoidal integral of uniformly spaced samples.
double trapezoid(std::span<const double> ys, double dx);

}  // namespace potbo::stats
