#include "potbo/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "potbo/errors.hpp"
#include "potbo/kernels.hpp"
#include "potbo/stats.hpp"

namespace potbo {

namespace {
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);
}

double silverman_bandwidth(std::span<const double> centers) {
  if (centers.size() < 2) throw DomainError("silverman_bandwidth: need at least two centers");
  const double sd = stats::stddev(centers);
  const double iqr = stats::interquartile_range(centers);
  const double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  if (!(spread > 0.0)) {
    throw DegenerateDataError("silverman_bandwidth: centers have no spread");
  }
  return 0.9 * spread * std::pow(static_cast<double>(centers.size()), -0.2);
}

double kde_raw(std::span<const double> centers, double bandwidth, double y) {
  if (centers.empty()) throw DomainError("kde_raw: empty centers");
  if (!(bandwidth > 0.0)) throw DomainError("kde_raw: bandwidth must be positive");
  double acc = 0.0;
  const double inv_h = 1.0 / bandwidth;
  for (const double c : centers) {
    const double z = (y - c) * inv_h;
    acc += std::exp(-0.5 * z * z);
  }
  return acc / (static_cast<double>(centers.size()) * bandwidth * kSqrt2Pi);
}

void kde_raw_grid(std::span<const double> centers, double bandwidth,
                  std::span<const double> ys, std::span<double> out) {
  if (centers.empty()) throw DomainError("kde_raw_grid: empty centers");
  if (!(bandwidth > 0.0)) throw DomainError("kde_raw_grid: bandwidth must be positive");
  kernels::gaussian_sum_grid(centers, 1.0 / bandwidth, ys, out);
  const double norm = 1.0 / (static_cast<double>(centers.size()) * bandwidth * kSqrt2Pi);
  for (double& v : out) v *= norm;
}

BoundaryKde::BoundaryKde(std::vector<double> centers, double bandwidth, double shift,
                         const Grid& grid)
  : centers_(std::move(centers)), bandwidth_(bandwidth), shift_(shift), normalizer_(1.0) {
  if (centers_.empty()) throw DomainError("BoundaryKde: empty centers");
  if (!(bandwidth_ > 0.0)) throw DomainError("BoundaryKde: bandwidth must be positive");
  if (!std::isfinite(shift_)) throw DomainError("BoundaryKde: shift must be finite");
  if (grid.lo != 0.0) throw DomainError("BoundaryKde: grid must start at 0");

  std::vector<double> shifted(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) shifted[i] = grid.at(i) - shift_;
  std::vector<double> vals(grid.points);
  kde_raw_grid(centers_, bandwidth_, shifted, vals);
  const double z = stats::trapezoid(vals, grid.step());
  if (!(z > 1e-300)) {
    throw DegenerateDensityError("BoundaryKde: normalizing integral vanished");
  }
  normalizer_ = z;
}

double BoundaryKde::operator()(double y) const {
  if (y < 0.0) return 0.0;
  return kde_raw(centers_, bandwidth_, y - shift_) / normalizer_;
}

std::vector<double> BoundaryKde::evaluate_grid(const Grid& grid) const {
  std::vector<double> shifted(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) shifted[i] = grid.at(i) - shift_;
  std::vector<double> vals(grid.points);
  kde_raw_grid(centers_, bandwidth_, shifted, vals);
  for (std::size_t i = 0; i < grid.points; ++i) {
    vals[i] = grid.at(i) < 0.0 ? 0.0 : vals[i] / normalizer_;
  }
  return vals;
}

}  // namespace potbo
