#pragma once

#include <cstddef>
#include <vector>

#include "potbo/errors.hpp"

namespace potbo {

//! Uniform evaluation grid shared by the density estimates.
struct Grid {
  double lo;
  double hi;
  std::size_t points;

  Grid(double lo_, double hi_, std::size_t points_) : lo(lo_), hi(hi_), points(points_) {
    if (!(lo < hi)) throw DomainError("Grid: lo must be below hi");
    if (points < 64) throw DomainError("Grid: need at least 64 points");
  }

  double step() const { return (hi - lo) / static_cast<double>(points - 1); }
  double at(std::size_t i) const { return lo + step() * static_cast<double>(i); }

  std::vector<double> values() const {
    std::vector<double> v(points);
    for (std::size_t i = 0; i < points; ++i) v[i] = at(i);
    return v;
  }
};

}  // namespace potbo
