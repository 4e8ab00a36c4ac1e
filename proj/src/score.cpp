#include "potbo/score.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "potbo/errors.hpp"
#include "potbo/excess.hpp"
#include "potbo/kde.hpp"
#include "potbo/stats.hpp"

namespace potbo {

double l1_distance(std::span<const double> a, std::span<const double> b, double dx) {
  if (a.size() != b.size()) throw DomainError("l1_distance: size mismatch");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = std::abs(a[i] - b[i]);
  return stats::trapezoid(diff, dx);
}

ScoreEvaluation score(const Sample& sample, double u, const ScoreConfig& cfg) {
  if (sample.empty()) throw EmptyDataError("score: empty sample");
  if (!std::isfinite(u)) throw DomainError("score: non-finite threshold");

  const double mx = *std::max_element(sample.values.begin(), sample.values.end());
  if (!(u < mx)) throw InsufficientDataError("score: no excesses above u=" + std::to_string(u));
  ExcessSet e = excesses_over(sample, u);
  if (e.exceed_count() < cfg.min_excess) {
    throw InsufficientDataError("score: " + std::to_string(e.exceed_count()) +
                                " excesses above u=" + std::to_string(u) + ", need " +
                                std::to_string(cfg.min_excess));
  }

  ScoreEvaluation ev;
  ev.threshold = u;
  ev.exceed_count = e.exceed_count();
  ev.fit = fit_gpd(e);

  const double y_max = *std::max_element(e.excesses.begin(), e.excesses.end());
  const Grid grid(0.0, y_max * cfg.span_factor, cfg.grid_points);

  const double h = silverman_bandwidth(e.excesses);
  const BoundaryKde kde(e.excesses, h, cfg.shift_fraction * h, grid);
  const std::vector<double> kde_vals = kde.evaluate_grid(grid);

  std::vector<double> pdf_vals(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) pdf_vals[i] = gpd_pdf(ev.fit.params, grid.at(i));

  ev.score = cfg.scale_c * l1_distance(kde_vals, pdf_vals, grid.step());
  return ev;
}

}  // namespace potbo
