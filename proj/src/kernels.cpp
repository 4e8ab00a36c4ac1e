#include "potbo/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace potbo::kernels {

namespace {

inline double gaussian_row(std::span<const double> centers, double inv_h, double y) {
  double acc = 0.0;
  for (const double c : centers) {
    const double z = (y - c) * inv_h;
    acc += std::exp(-0.5 * z * z);
  }
  return acc;
}

inline double block_sum(std::span<const double> xs, std::size_t b) {
  const std::size_t lo = b * kBlock;
  const std::size_t hi = std::min(lo + kBlock, xs.size());
  double acc = 0.0;
  for (std::size_t i = lo; i < hi; ++i) acc += xs[i];
  return acc;
}

inline ShiftedLogSum block_log1p(std::span<const double> xs, double a, std::size_t b) {
  const std::size_t lo = b * kBlock;
  const std::size_t hi = std::min(lo + kBlock, xs.size());
  ShiftedLogSum r;
  for (std::size_t i = lo; i < hi; ++i) {
    const double t = 1.0 + a * xs[i];
    r.min_arg = std::min(r.min_arg, t);
    if (t > 0.0) r.sum += std::log1p(a * xs[i]);
  }
  return r;
}

inline std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

}  // namespace

void gaussian_sum_grid_serial(std::span<const double> centers, double inv_h,
                              std::span<const double> ys, std::span<double> out) {
  for (std::size_t i = 0; i < ys.size(); ++i) out[i] = gaussian_row(centers, inv_h, ys[i]);
}

void gaussian_sum_grid(std::span<const double> centers, double inv_h,
                       std::span<const double> ys, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(ys.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        gaussian_row(centers, inv_h, ys[static_cast<std::size_t>(i)]);
  }
}

double blocked_sum_serial(std::span<const double> xs) {
  const std::size_t nb = block_count(xs.size());
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) total += block_sum(xs, b);
  return total;
}

double blocked_sum(std::span<const double> xs) {
  const std::size_t nb = block_count(xs.size());
  std::vector<double> partial(nb, 0.0);
  const auto n = static_cast<std::ptrdiff_t>(nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < n; ++b) {
    partial[static_cast<std::size_t>(b)] = block_sum(xs, static_cast<std::size_t>(b));
  }
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) total += partial[b];
  return total;
}

ShiftedLogSum log1p_sum_serial(std::span<const double> xs, double a) {
  const std::size_t nb = block_count(xs.size());
  ShiftedLogSum total;
  for (std::size_t b = 0; b < nb; ++b) {
    const ShiftedLogSum r = block_log1p(xs, a, b);
    total.sum += r.sum;
    total.min_arg = std::min(total.min_arg, r.min_arg);
  }
  return total;
}

ShiftedLogSum log1p_sum(std::span<const double> xs, double a) {
  const std::size_t nb = block_count(xs.size());
  std::vector<ShiftedLogSum> partial(nb);
  const auto n = static_cast<std::ptrdiff_t>(nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < n; ++b) {
    partial[static_cast<std::size_t>(b)] = block_log1p(xs, a, static_cast<std::size_t>(b));
  }
  ShiftedLogSum total;
  for (std::size_t b = 0; b < nb; ++b) {
    total.sum += partial[b].sum;
    total.min_arg = std::min(total.min_arg, partial[b].min_arg);
  }
  return total;
}

}  // namespace potbo::kernels
