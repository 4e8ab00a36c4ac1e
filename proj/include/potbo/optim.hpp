#pragma once

#include <functional>
#include <span>
#include <vector>

namespace potbo::optim {

struct SimplexOptions {
  double tol = 1e-8;           // convergence on the value spread across the simplex
  int max_iter = 2000;
  std::vector<double> steps;   // initial simplex edge per dimension; 0.1 if empty
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

//! Derivative-free Nelder-Mead simplex minimization. The objective may
//! return +inf to mark infeasible points; the search walks away from them.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> x0, const SimplexOptions& opts = {});

}  // namespace potbo::optim
