#pragma once

#include <cstddef>
#include <utility>

#include "potbo/excess.hpp"
#include "potbo/gpd.hpp"

namespace potbo {

//! Fits with fewer excesses than this are refused: the observed-information
//! standard errors are unusable below it.
inline constexpr std::size_t kMinExcessCount = 10;

//! Maximum-likelihood GPD fit of an excess set, with standard errors from
//! the finite-difference observed information matrix.
struct GpdFit {
  GpdParams params;
  double threshold = 0.0;
  std::size_t exceed_count = 0;
  double zeta_u = 0.0;
  double log_likelihood = 0.0;
  double se_xi = 0.0;
  double se_sigma = 0.0;
  double cov_xi_sigma = 0.0;
};

//! Log-likelihood of the excesses under p. Returns -inf when the support
//! constraint 1 + xi*y/sigma > 0 fails for some excess.
double gpd_loglik(const GpdParams& p, const ExcessSet& e);

//! MLE over (xi, log sigma) by Nelder-Mead from a method-of-moments start.
GpdFit fit_gpd(const ExcessSet& e);

//! Modified scale sigma* = sigma - u*xi and its delta-method standard error.
std::pair<double, double> sigma_star(const GpdFit& fit);

}  // namespace potbo
