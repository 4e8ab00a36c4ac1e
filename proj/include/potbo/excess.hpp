#pragma once

#include <cstddef>
#include <vector>

#include "potbo/sample.hpp"

namespace potbo {

//! Threshold excesses x - u for the observations x > u, in input order.
struct ExcessSet {
  double threshold = 0.0;
  std::vector<double> excesses;
  std::size_t total_count = 0;

  std::size_t exceed_count() const { return excesses.size(); }
  //! Exceedance probability estimate n_u / n.
  double zeta() const {
    return static_cast<double>(excesses.size()) / static_cast<double>(total_count);
  }
};

//! Throws EmptyExcessError when no observation exceeds u.
ExcessSet excesses_over(const Sample& sample, double u);

}  // namespace potbo
