#pragma once

#include <cstdint>

#include "potbo/sample.hpp"

namespace potbo {

//! Below this magnitude the shape is treated as zero and the exponential
//! branch is used; elsewhere log1p/expm1 forms keep the two-branch family
//! numerically continuous across xi = 0.
inline constexpr double kXiZeroTol = 1e-12;

//! Generalized Pareto parameters for an excess variable y >= 0.
//! The support is [0, inf) for xi >= 0 and [0, -sigma/xi) for xi < 0.
struct GpdParams {
  double xi = 0.0;
  double sigma = 1.0;
};

//! Throws DomainError unless sigma > 0 and both fields are finite.
void validate(const GpdParams& p);

//! Upper end of the support: -sigma/xi for xi < 0, +inf otherwise.
double gpd_support_upper(const GpdParams& p);

//! Distribution function H(y). Evaluations outside the support return the
//! natural limit (0 below, 1 at or above the upper endpoint), never throw.
double gpd_cdf(const GpdParams& p, double y);

//! Density h(y); zero outside the support.
double gpd_pdf(const GpdParams& p, double y);

//! Inverse of gpd_cdf on (0, 1).
double gpd_quantile(const GpdParams& p, double q);

//! Inverse-transform sample of n excesses, deterministic in the seed.
Sample gpd_sample(const GpdParams& p, std::size_t n, std::uint64_t seed);

}  // namespace potbo
