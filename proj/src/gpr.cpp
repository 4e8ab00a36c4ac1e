#include "potbo/gpr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "potbo/errors.hpp"
#include "potbo/stats.hpp"

namespace potbo {

namespace {

Eigen::MatrixXd kernel_matrix(const Eigen::VectorXd& x, double v, double ell, double diag) {
  const auto n = x.size();
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double d = x[i] - x[j];
      const double val = v * std::exp(-d * d / (2.0 * ell * ell));
      k(i, j) = val;
      k(j, i) = val;
    }
    k(i, i) += diag;
  }
  return k;
}

struct CholFit {
  Eigen::MatrixXd l;
  Eigen::VectorXd alpha;
  double log_marginal = -std::numeric_limits<double>::infinity();
  bool ok = false;
};

CholFit try_fit(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double v, double ell,
                double noise) {
  CholFit out;
  for (double jitter = 0.0; jitter <= 1e-4; jitter = jitter == 0.0 ? 1e-10 : jitter * 10.0) {
    const Eigen::MatrixXd k = kernel_matrix(x, v, ell, noise + jitter);
    Eigen::LLT<Eigen::MatrixXd> llt(k);
    if (llt.info() != Eigen::Success) continue;
    out.l = llt.matrixL();
    out.alpha = llt.solve(y);
    const auto n = static_cast<double>(x.size());
    out.log_marginal = -0.5 * y.dot(out.alpha) - out.l.diagonal().array().log().sum() -
                       0.5 * n * std::log(2.0 * std::numbers::pi);
    out.ok = true;
    return out;
  }
  return out;
}

}  // namespace

GpPosterior gpr_fit(std::span<const double> xs, std::span<const double> ys,
                    const GprConfig& cfg) {
  if (xs.size() != ys.size()) throw DomainError("gpr_fit: size mismatch");
  if (xs.size() < 2) throw DomainError("gpr_fit: need at least two points");
  if (cfg.lengthscale_grid.empty()) throw DomainError("gpr_fit: empty lengthscale grid");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (std::abs(xs[i] - xs[j]) < 1e-9) {
        throw DuplicatePointError("gpr_fit: inputs coincide within 1e-9");
      }
    }
  }

  GpPosterior post;
  post.xs_.assign(xs.begin(), xs.end());
  post.ys_.assign(ys.begin(), ys.end());

  const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
  post.x_lo_ = *lo_it;
  post.x_span_ = *hi_it - *lo_it;

  post.y_mean_ = stats::mean(ys);
  const double sd = stats::stddev(ys);
  post.y_sd_ = sd > 1e-12 ? sd : 1.0;

  const auto n = static_cast<Eigen::Index>(xs.size());
  Eigen::VectorXd x_std(n), y_std(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x_std[i] = (xs[static_cast<std::size_t>(i)] - post.x_lo_) / post.x_span_;
    y_std[i] = (ys[static_cast<std::size_t>(i)] - post.y_mean_) / post.y_sd_;
  }

  const double var_std = y_std.squaredNorm() / static_cast<double>(n);
  const double v = std::max(var_std, 1e-12);
  post.kernel_variance_ = v;
  post.noise_variance_ = cfg.noise_variance;

  CholFit best;
  double best_ell = 0.0;
  for (const double ell : cfg.lengthscale_grid) {
    if (!(ell > 0.0)) throw DomainError("gpr_fit: lengthscales must be positive");
    const CholFit f = try_fit(x_std, y_std, v, ell, cfg.noise_variance);
    if (f.ok && (!best.ok || f.log_marginal > best.log_marginal)) {
      best = f;
      best_ell = ell;
    }
  }
  if (!best.ok) throw NumericError("gpr_fit: Cholesky failed for every lengthscale");

  post.lengthscale_ = best_ell;
  post.chol_ = std::move(best.l);
  post.alpha_ = std::move(best.alpha);
  return post;
}

GpPosterior::Prediction GpPosterior::predict(double x) const {
  const double xs = (x - x_lo_) / x_span_;
  const auto n = static_cast<Eigen::Index>(xs_.size());
  Eigen::VectorXd k_star(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = xs - (xs_[static_cast<std::size_t>(i)] - x_lo_) / x_span_;
    k_star[i] = kernel_variance_ * std::exp(-d * d / (2.0 * lengthscale_ * lengthscale_));
  }
  const double mu_std = k_star.dot(alpha_);
  const Eigen::VectorXd w = chol_.triangularView<Eigen::Lower>().solve(k_star);
  const double var_std = std::max(kernel_variance_ - w.squaredNorm(), 0.0);

  Prediction p;
  p.mean = y_mean_ + y_sd_ * mu_std;
  p.sd = y_sd_ * std::sqrt(var_std);
  return p;
}

double expected_improvement(const GpPosterior& post, double x, double f_best) {
  const auto [mu, s] = post.predict(x);
  const double gap = f_best - mu;
  if (!(s > 0.0)) return std::max(gap, 0.0);
  const double z = gap / s;
  const double ei = gap * stats::norm_cdf(z) + s * stats::norm_pdf(z);
  return std::max(ei, 0.0);
}

}  // namespace potbo
