#include "potbo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "potbo/errors.hpp"

namespace potbo::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("mean of empty sequence");
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw DomainError("variance needs at least two values");
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / static_cast<double>(xs.size() - 1);
}

double stddev(std::span<const double> xs) { return std::sqrt(variance(xs)); }

double percentile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw DomainError("percentile of empty sequence");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("percentile level outside [0,1]");
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto i = static_cast<std::size_t>(h);
  if (i + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(i);
  return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

double percentile(std::span<const double> xs, double p) {
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  return percentile_sorted(sorted, p);
}

double interquartile_range(std::span<const double> xs) {
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  return percentile_sorted(sorted, 0.75) - percentile_sorted(sorted, 0.25);
}

double norm_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal quantile level outside (0,1)");

  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // One Halley step against the exact CDF brings the error to ~1e-15.
  const double e = norm_cdf(x) - p;
  const double u = e / norm_pdf(x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("linear_fit size mismatch");
  if (xs.size() < 2) throw DomainError("linear_fit needs at least two points");
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) throw DegenerateDataError("linear_fit: all abscissae identical");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy <= 0.0) {
    fit.r2 = 1.0;
  } else {
    const double ss_res = syy - fit.slope * sxy;
    fit.r2 = 1.0 - std::max(ss_res, 0.0) / syy;
  }
  return fit;
}

double trapezoid(std::span<const double> ys, double dx) {
  if (ys.size() < 2) throw DomainError("trapezoid needs at least two samples");
  double acc = 0.0;
  for (double y : ys) acc += y;
  acc -= 0.5 * (ys.front() + ys.back());
  return acc * dx;
}

}  // namespace potbo::stats
