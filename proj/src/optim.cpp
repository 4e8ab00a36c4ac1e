#include "potbo/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "potbo/errors.hpp"

namespace potbo::optim {

namespace {
constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
}  // namespace

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> x0, const SimplexOptions& opts) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw DomainError("nelder_mead: empty start point");

  std::vector<std::vector<double>> pts(dim + 1, std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < dim; ++i) {
    const double step = i < opts.steps.size() ? opts.steps[i] : 0.1;
    pts[i + 1][i] += step;
  }
  std::vector<double> vals(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(dim + 1);
  SimplexResult res;
  for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    if (std::isfinite(vals[best]) && vals[worst] - vals[best] <= opts.tol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += pts[order[k]][j];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto along = [&](double coef) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j) p[j] = centroid[j] + coef * (centroid[j] - pts[worst][j]);
      return p;
    };

    std::vector<double> xr = along(kReflect);
    const double fr = f(xr);
    if (fr < vals[best]) {
      std::vector<double> xe = along(kExpand);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = std::move(xe);
        vals[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = std::move(xr);
      vals[worst] = fr;
      continue;
    }

    bool contracted = false;
    if (fr < vals[worst]) {
      std::vector<double> xc = along(kContract);  // outside contraction
      const double fc = f(xc);
      if (fc <= fr) {
        pts[worst] = std::move(xc);
        vals[worst] = fc;
        contracted = true;
      }
    } else {
      std::vector<double> xc = along(-kContract);  // inside contraction
      const double fc = f(xc);
      if (fc < vals[worst]) {
        pts[worst] = std::move(xc);
        vals[worst] = fc;
        contracted = true;
      }
    }
    if (contracted) continue;

    for (std::size_t k = 1; k <= dim; ++k) {
      const std::size_t i = order[k];
      for (std::size_t j = 0; j < dim; ++j) {
        pts[i][j] = pts[best][j] + kShrink * (pts[i][j] - pts[best][j]);
      }
      vals[i] = f(pts[i]);
    }
  }

  const auto it = std::min_element(vals.begin(), vals.end());
  res.value = *it;
  res.x = pts[static_cast<std::size_t>(it - vals.begin())];
  return res;
}

}  // namespace potbo::optim
