#pragma once

#include <span>
#include <vector>

#include "potbo/grid.hpp"

namespace potbo {

//! Silverman's rule of thumb, 0.9 * min(sd, IQR/1.34) * N^(-1/5).
//! Needs at least two distinct centers.
double silverman_bandwidth(std::span<const double> centers);

//! Gaussian-kernel density estimate at a single point,
//! (1/(N h)) sum_i K((y - x_i)/h) with the standard normal kernel K.
double kde_raw(std::span<const double> centers, double bandwidth, double y);

//! Same estimate over a batch of points.
void kde_raw_grid(std::span<const double> centers, double bandwidth,
                  std::span<const double> ys, std::span<double> out);

//! Density estimate for data supported on [0, inf): the raw KDE read at
//! y - shift and renormalized so the values on the grid integrate to one.
//! Evaluations below zero return zero. A negative shift reads the raw
//! estimate inside the support, which compensates the kernel mass that
//! leaks below the boundary; the selector uses shift = -bandwidth/2.
class BoundaryKde {
public:
  //! The grid must start at 0; its trapezoidal rule defines the normalizer.
  BoundaryKde(std::vector<double> centers, double bandwidth, double shift, const Grid& grid);

  double operator()(double y) const;
  std::vector<double> evaluate_grid(const Grid& grid) const;

  double bandwidth() const { return bandwidth_; }
  double shift() const { return shift_; }
  double normalizer() const { return normalizer_; }
  std::span<const double> centers() const { return centers_; }

private:
  std::vector<double> centers_;
  double bandwidth_;
  double shift_;
  double normalizer_;
};

}  // namespace potbo
