#pragma once

#include <cstddef>
#include <span>

#include "potbo/fit.hpp"
#include "potbo/grid.hpp"
#include "potbo/sample.hpp"

namespace potbo {

//! Settings for the threshold objective.
struct ScoreConfig {
  std::size_t grid_points = 2048;
  double scale_c = 1.0;          // multiplicative constant; the argmin is unaffected
  double span_factor = 1.25;     // grid upper bound as a multiple of the largest excess
  double shift_fraction = -0.5;  // KDE boundary shift as a fraction of the bandwidth;
                                 // negative reads into the interior (see BoundaryKde)
  std::size_t min_excess = kMinExcessCount;
};

//! One evaluation of the objective at threshold u.
struct ScoreEvaluation {
  double threshold = 0.0;
  double score = 0.0;
  GpdFit fit;
  std::size_t exceed_count = 0;
};

//! Trapezoidal L1 distance between two densities sampled on a shared grid.
double l1_distance(std::span<const double> a, std::span<const double> b, double dx);

//! The threshold objective: fit a GPD to the excesses over u, build the
//! boundary-corrected KDE on the same excesses, and integrate the absolute
//! difference of the two densities over a shared grid.
ScoreEvaluation score(const Sample& sample, double u, const ScoreConfig& cfg = {});

}  // namespace potbo
