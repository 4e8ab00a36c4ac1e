#include "potbo/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "potbo/errors.hpp"
#include "potbo/stats.hpp"

namespace potbo {

std::vector<double> default_threshold_grid(const Sample& sample, const DiagnosticsConfig& cfg) {
  if (sample.size() < 2) throw EmptyDataError("threshold grid: sample too small");
  if (cfg.threshold_count < 2) throw DomainError("threshold grid: need at least two thresholds");
  std::vector<double> sorted = sample.values;
  std::sort(sorted.begin(), sorted.end());
  const double lo = stats::percentile_sorted(sorted, cfg.lo_percentile);
  const double hi = stats::percentile_sorted(sorted, cfg.hi_percentile);
  if (!(lo < hi)) throw DegenerateDataError("threshold grid: percentile range is empty");
  std::vector<double> grid(cfg.threshold_count);
  for (std::size_t i = 0; i < cfg.threshold_count; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cfg.threshold_count - 1);
  }
  return grid;
}

std::vector<MeanExcessPoint> mean_excess_series(const Sample& sample,
                                                std::span<const double> thresholds,
                                                std::size_t min_n) {
  if (sample.empty()) throw EmptyDataError("mean_excess_series: empty sample");
  std::vector<double> sorted = sample.values;
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::optional<MeanExcessPoint>> slots(thresholds.size());
  const auto m = static_cast<std::ptrdiff_t>(thresholds.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < m; ++t) {
    const double u = thresholds[static_cast<std::size_t>(t)];
    const auto first = std::upper_bound(sorted.begin(), sorted.end(), u);
    const auto n = static_cast<std::size_t>(sorted.end() - first);
    if (n < std::max<std::size_t>(min_n, 2)) continue;
    double acc = 0.0;
    for (auto it = first; it != sorted.end(); ++it) acc += *it - u;
    const double mean = acc / static_cast<double>(n);
    double sq = 0.0;
    for (auto it = first; it != sorted.end(); ++it) {
      const double d = (*it - u) - mean;
      sq += d * d;
    }
    const double sd = std::sqrt(sq / static_cast<double>(n - 1));
    slots[static_cast<std::size_t>(t)] =
        MeanExcessPoint{u, mean, sd / std::sqrt(static_cast<double>(n)), n};
  }

  std::vector<MeanExcessPoint> out;
  for (const auto& s : slots) {
    if (s) out.push_back(*s);
  }
  if (out.empty()) throw EmptyDataError("mean_excess_series: no threshold kept enough excesses");
  return out;
}

StabilitySeries stability_series(const Sample& sample, std::span<const double> thresholds,
                                 double ci_level) {
  if (!(ci_level > 0.0 && ci_level < 1.0)) {
    throw DomainError("stability_series: ci_level outside (0,1)");
  }
  const double z = stats::norm_quantile(0.5 + ci_level / 2.0);

  struct Slot {
    std::optional<StabilityPoint> xi, ss;
    std::optional<SkippedThreshold> skipped;
  };
  std::vector<Slot> slots(thresholds.size());

  const auto m = static_cast<std::ptrdiff_t>(thresholds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < m; ++t) {
    const double u = thresholds[static_cast<std::size_t>(t)];
    Slot& slot = slots[static_cast<std::size_t>(t)];
    try {
      const ExcessSet e = excesses_over(sample, u);
      const GpdFit fit = fit_gpd(e);
      const auto [ss, ss_se] = sigma_star(fit);
      slot.xi = StabilityPoint{u, fit.params.xi, fit.params.xi - z * fit.se_xi,
                               fit.params.xi + z * fit.se_xi, fit.exceed_count};
      slot.ss = StabilityPoint{u, ss, ss - z * ss_se, ss + z * ss_se, fit.exceed_count};
    } catch (const Error& err) {
      slot.skipped = SkippedThreshold{u, err.what()};
    }
  }

  StabilitySeries out;
  for (const Slot& s : slots) {
    if (s.xi) out.xi.push_back(*s.xi);
    if (s.ss) out.sigma_star.push_back(*s.ss);
    if (s.skipped) out.skipped.push_back(*s.skipped);
  }
  if (out.xi.empty()) throw EmptyDataError("stability_series: no threshold was fittable");
  return out;
}

std::pair<std::vector<ProbabilityPoint>, std::vector<QuantilePoint>> probability_quantile_plots(
    const GpdFit& fit, const ExcessSet& e) {
  std::vector<double> sorted = e.excesses;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();

  std::vector<ProbabilityPoint> prob(k);
  std::vector<QuantilePoint> quant(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double p = static_cast<double>(i + 1) / static_cast<double>(k + 1);
    prob[i] = {p, gpd_cdf(fit.params, sorted[i])};
    quant[i] = {fit.threshold + gpd_quantile(fit.params, p), fit.threshold + sorted[i]};
  }
  return {std::move(prob), std::move(quant)};
}

std::vector<ReturnLevelPoint> return_level_series(const GpdFit& fit,
                                                  std::span<const double> m_values,
                                                  double ci_level) {
  if (!(ci_level > 0.0 && ci_level < 1.0)) {
    throw DomainError("return_level_series: ci_level outside (0,1)");
  }
  const double z = stats::norm_quantile(0.5 + ci_level / 2.0);
  const double xi = fit.params.xi;
  const double sigma = fit.params.sigma;
  const double zeta = fit.zeta_u;

  std::vector<ReturnLevelPoint> out;
  for (const double m : m_values) {
    const double t = m * zeta;  // expected number of exceedances within m observations
    if (!(t >= 1.0)) continue;
    double level, g_xi, g_sigma;
    if (std::abs(xi) < kXiZeroTol) {
      const double lt = std::log(t);
      level = fit.threshold + sigma * lt;
      g_sigma = lt;
      g_xi = 0.5 * sigma * lt * lt;
    } else {
      const double tp = std::pow(t, xi);
      level = fit.threshold + sigma / xi * (tp - 1.0);
      g_sigma = (tp - 1.0) / xi;
      g_xi = sigma * (tp * std::log(t) / xi - (tp - 1.0) / (xi * xi));
    }
    const double var = g_xi * g_xi * fit.se_xi * fit.se_xi +
                       2.0 * g_xi * g_sigma * fit.cov_xi_sigma +
                       g_sigma * g_sigma * fit.se_sigma * fit.se_sigma;
    const double se = std::sqrt(std::max(var, 0.0));
    out.push_back({m, level, level - z * se, level + z * se});
  }
  return out;
}

std::vector<double> default_return_periods(const GpdFit& fit, std::size_t count) {
  if (count < 2) throw DomainError("default_return_periods: need at least two periods");
  // m*zeta log-spaced over [1, 1e4] so the curve starts exactly at the threshold.
  std::vector<double> out(count);
  const double span = 4.0;  // decades
  for (std::size_t i = 0; i < count; ++i) {
    const double t = std::pow(10.0, span * static_cast<double>(i) / static_cast<double>(count - 1));
    out[i] = t / fit.zeta_u;
  }
  return out;
}

DensitySeries density_series(const GpdFit& fit, const ExcessSet& e, std::size_t bins) {
  if (bins < 5) throw DomainError("density_series: need at least five bins");
  const double y_max = *std::max_element(e.excesses.begin(), e.excesses.end());
  const double width = y_max / static_cast<double>(bins);
  const auto n = static_cast<double>(e.exceed_count());

  DensitySeries out;
  out.bin_lo.resize(bins);
  out.bin_hi.resize(bins);
  out.hist.assign(bins, 0.0);
  out.fit_at_center.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out.bin_lo[b] = width * static_cast<double>(b);
    out.bin_hi[b] = width * static_cast<double>(b + 1);
    out.fit_at_center[b] = gpd_pdf(fit.params, 0.5 * (out.bin_lo[b] + out.bin_hi[b]));
  }
  for (const double y : e.excesses) {
    auto b = static_cast<std::size_t>(y / width);
    if (b >= bins) b = bins - 1;  // the maximum lands in the last bin
    out.hist[b] += 1.0;
  }
  for (double& h : out.hist) h /= n * width;

  constexpr std::size_t kCurvePoints = 256;
  out.curve_y.resize(kCurvePoints);
  out.curve_f.resize(kCurvePoints);
  for (std::size_t i = 0; i < kCurvePoints; ++i) {
    const double y = y_max * static_cast<double>(i) / static_cast<double>(kCurvePoints - 1);
    out.curve_y[i] = y;
    out.curve_f[i] = gpd_pdf(fit.params, y);
  }
  return out;
}

LinearitySummary linear_summary(const std::string& name, std::span<const double> us,
                                std::span<const double> values, double central_fraction) {
  if (us.size() != values.size()) throw DomainError("linear_summary: size mismatch");
  if (us.size() < 2) throw DomainError("linear_summary: need at least two points");
  if (!(central_fraction > 0.0 && central_fraction <= 1.0)) {
    throw DomainError("linear_summary: central fraction outside (0,1]");
  }
  const auto [lo_it, hi_it] = std::minmax_element(us.begin(), us.end());
  const double margin = 0.5 * (1.0 - central_fraction) * (*hi_it - *lo_it);
  const double u_lo = *lo_it + margin;
  const double u_hi = *hi_it - margin;

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (us[i] >= u_lo && us[i] <= u_hi) {
      xs.push_back(us[i]);
      ys.push_back(values[i]);
    }
  }
  if (xs.size() < 2) throw InsufficientDataError("linear_summary: central range too sparse");

  const stats::LinearFit f = stats::linear_fit(xs, ys);
  return {name, f.slope, f.intercept, f.r2, u_lo, u_hi};
}

}  // namespace potbo
