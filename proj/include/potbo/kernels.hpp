#pragma once

#include <cstddef>
#include <span>

// Hot inner loops, each in two variants: a *_serial reference and an
// OpenMP-parallel version under the plain name. The parallel variants are
// organized so every output element (or partial block) is produced by the
// same sequence of floating-point operations as the reference, which makes
// the two bit-identical for any thread count. Reductions use fixed
// 1024-element blocks combined in block order.

namespace potbo::kernels {

inline constexpr std::size_t kBlock = 1024;

//! out[i] = sum_j exp(-0.5 * ((ys[i] - centers[j]) * inv_h)^2).
void gaussian_sum_grid_serial(std::span<const double> centers, double inv_h,
                              std::span<const double> ys, std::span<double> out);
void gaussian_sum_grid(std::span<const double> centers, double inv_h,
                       std::span<const double> ys, std::span<double> out);

//! Block-wise left-to-right sum.
double blocked_sum_serial(std::span<const double> xs);
double blocked_sum(std::span<const double> xs);

struct ShiftedLogSum {
  double sum = 0.0;      // sum of log1p(a*x_i) over terms with 1 + a*x_i > 0
  double min_arg = 1.0;  // min over 1 + a*x_i; <= 0 means the sum is unusable
};

//! Accumulates sum_i log1p(a*x_i) with the feasibility witness min(1 + a*x_i).
ShiftedLogSum log1p_sum_serial(std::span<const double> xs, double a);
ShiftedLogSum log1p_sum(std::span<const double> xs, double a);

}  // namespace potbo::kernels
