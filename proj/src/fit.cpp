#include "potbo/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "potbo/errors.hpp"
#include "potbo/kernels.hpp"
#include "potbo/optim.hpp"
#include "potbo/stats.hpp"

namespace potbo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 2x2 covariance of (xi, sigma) from the inverse observed information.
struct Cov2 {
  double var_xi = 0.0;
  double var_sigma = 0.0;
  double cov = 0.0;
};

// Negative log-likelihood as a function of theta = (xi, sigma); +inf when
// infeasible or sigma <= 0. Used by the Hessian differencing.
double negloglik(const ExcessSet& e, double xi, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(xi) || !std::isfinite(sigma)) return kInf;
  const double ll = gpd_loglik({xi, sigma}, e);
  return std::isfinite(ll) ? -ll : kInf;
}

// Central-difference Hessian of the negative log-likelihood. Returns false
// if any stencil point is infeasible or the result is not positive definite.
bool observed_information(const ExcessSet& e, double xi, double sigma, double rel_step,
                          Cov2* out) {
  const double hx = rel_step * std::max(std::abs(xi), 1.0);
  const double hs = rel_step * std::max(std::abs(sigma), 1.0);

  const auto f = [&](double a, double b) { return negloglik(e, a, b); };
  const std::array<double, 9> v = {
      f(xi - hx, sigma - hs), f(xi, sigma - hs), f(xi + hx, sigma - hs),
      f(xi - hx, sigma),      f(xi, sigma),      f(xi + hx, sigma),
      f(xi - hx, sigma + hs), f(xi, sigma + hs), f(xi + hx, sigma + hs)};
  for (const double x : v) {
    if (!std::isfinite(x)) return false;
  }

  const double h11 = (v[5] - 2.0 * v[4] + v[3]) / (hx * hx);
  const double h22 = (v[7] - 2.0 * v[4] + v[1]) / (hs * hs);
  const double h12 = (v[8] - v[6] - v[2] + v[0]) / (4.0 * hx * hs);

  const double det = h11 * h22 - h12 * h12;
  if (!(h11 > 0.0) || !(det > 0.0)) return false;

  out->var_xi = h22 / det;
  out->var_sigma = h11 / det;
  out->cov = -h12 / det;
  return true;
}

// Large-sample covariance of the GPD MLE, used when the numerical Hessian is
// unusable (e.g. the fit sits on the support boundary). Valid for xi > -1/2;
// the shape is clamped there as a last resort.
Cov2 asymptotic_covariance(double xi, double sigma, std::size_t n) {
  const double x = std::max(xi, -0.499);
  const double scale = (1.0 + x) / static_cast<double>(n);
  Cov2 c;
  c.var_xi = scale * (1.0 + x);
  c.var_sigma = scale * 2.0 * sigma * sigma;
  c.cov = scale * (-sigma);
  return c;
}

}  // namespace

double gpd_loglik(const GpdParams& p, const ExcessSet& e) {
  validate(p);
  if (e.excesses.empty()) throw DomainError("gpd_loglik: empty excess set");
  const auto n = static_cast<double>(e.exceed_count());
  if (std::abs(p.xi) < kXiZeroTol) {
    return -n * std::log(p.sigma) - kernels::blocked_sum(e.excesses) / p.sigma;
  }
  const auto [sum, min_arg] = kernels::log1p_sum(e.excesses, p.xi / p.sigma);
  if (!(min_arg > 0.0)) return -kInf;
  return -n * std::log(p.sigma) - (1.0 / p.xi + 1.0) * sum;
}

GpdFit fit_gpd(const ExcessSet& e) {
  const std::size_t n = e.exceed_count();
  if (n < kMinExcessCount) {
    throw InsufficientDataError("fit_gpd: " + std::to_string(n) + " excesses, need at least " +
                                std::to_string(kMinExcessCount));
  }
  for (const double y : e.excesses) {
    if (!(y > 0.0) || !std::isfinite(y)) {
      throw DomainError("fit_gpd: excesses must be positive and finite");
    }
  }

  const double m = stats::mean(e.excesses);
  const double v = stats::variance(e.excesses);

  // Method-of-moments start; the exponential point (0, mean) is always
  // feasible and backs it up.
  double xi0 = 0.0, sigma0 = m;
  if (v > 0.0) {
    const double r = m * m / v;
    xi0 = 0.5 * (1.0 - r);
    sigma0 = 0.5 * m * (r + 1.0);
  }
  if (!(sigma0 > 0.0) || !std::isfinite(negloglik(e, xi0, sigma0))) {
    xi0 = 0.0;
    sigma0 = m;
  }

  // Optimize over (xi, log sigma): the scale stays positive by construction
  // and the support constraint surfaces as +inf.
  const auto objective = [&](std::span<const double> t) {
    return negloglik(e, t[0], std::exp(t[1]));
  };

  optim::SimplexOptions opts;
  opts.steps = {0.1, 0.2};
  const std::array<double, 2> start = {xi0, std::log(sigma0)};
  optim::SimplexResult r = optim::nelder_mead(objective, start, opts);

  // One tight restart from the found point polishes the optimum.
  opts.steps = {0.01, 0.02};
  optim::SimplexResult r2 = optim::nelder_mead(objective, r.x, opts);
  if (r2.value <= r.value) {
    r2.iterations += r.iterations;
    r = std::move(r2);
  }

  const double xi_hat = r.x[0];
  const double sigma_hat = std::exp(r.x[1]);
  if (!r.converged || !std::isfinite(r.value)) {
    throw ConvergenceError("fit_gpd: simplex search did not converge", xi_hat, sigma_hat,
                           -r.value);
  }

  GpdFit fit;
  fit.params = {xi_hat, sigma_hat};
  fit.threshold = e.threshold;
  fit.exceed_count = n;
  fit.zeta_u = e.zeta();
  fit.log_likelihood = -r.value;

  Cov2 cov;
  bool ok = false;
  for (double step = 1e-5; step <= 1e-3 + 1e-12 && !ok; step *= 10.0) {
    ok = observed_information(e, xi_hat, sigma_hat, step, &cov);
  }
  if (!ok) cov = asymptotic_covariance(xi_hat, sigma_hat, n);

  fit.se_xi = std::sqrt(cov.var_xi);
  fit.se_sigma = std::sqrt(cov.var_sigma);
  fit.cov_xi_sigma = cov.cov;
  return fit;
}

std::pair<double, double> sigma_star(const GpdFit& fit) {
  const double u = fit.threshold;
  const double value = fit.params.sigma - u * fit.params.xi;
  const double var = u * u * fit.se_xi * fit.se_xi - 2.0 * u * fit.cov_xi_sigma +
                     fit.se_sigma * fit.se_sigma;
  return {value, std::sqrt(std::max(var, 0.0))};
}

}  // namespace potbo
