#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace potbo {

//! Hyperparameter handling for the one-dimensional surrogate. Inputs are
//! mapped to [0,1] and outputs standardized internally; the lengthscale is
//! picked from a coarse grid by marginal likelihood, the kernel variance is
//! matched to the (standardized) output variance, and the noise is fixed.
struct GprConfig {
  std::vector<double> lengthscale_grid = {0.05, 0.1, 0.2, 0.4, 0.8};
  double noise_variance = 1e-6;
};

//! Gaussian-process posterior with a squared-exponential kernel,
//! k(x, x') = v * exp(-(x - x')^2 / (2 l^2)).
class GpPosterior {
public:
  struct Prediction {
    double mean = 0.0;
    double sd = 0.0;
  };

  //! Posterior of the latent function at x (noise-free predictive sd).
  Prediction predict(double x) const;

  double lengthscale() const { return lengthscale_; }
  double kernel_variance() const { return kernel_variance_; }
  double noise_variance() const { return noise_variance_; }
  std::span<const double> train_x() const { return xs_; }
  std::span<const double> train_y() const { return ys_; }

private:
  friend GpPosterior gpr_fit(std::span<const double>, std::span<const double>,
                             const GprConfig&);

  std::vector<double> xs_, ys_;
  double x_lo_ = 0.0, x_span_ = 1.0;
  double y_mean_ = 0.0, y_sd_ = 1.0;
  double lengthscale_ = 0.0;
  double kernel_variance_ = 0.0;
  double noise_variance_ = 0.0;
  Eigen::MatrixXd chol_;   // lower Cholesky factor of K + noise*I
  Eigen::VectorXd alpha_;  // (K + noise*I)^{-1} y, standardized units
};

//! Fits the posterior to at least two points with distinct inputs
//! (tolerance 1e-9). Cholesky failures escalate a jitter ladder from
//! 1e-10 to 1e-4 before giving up.
GpPosterior gpr_fit(std::span<const double> xs, std::span<const double> ys,
                    const GprConfig& cfg = {});

//! Expected improvement for minimization: with z = (f_best - mu)/s,
//! EI = (f_best - mu) Phi(z) + s phi(z), and max(f_best - mu, 0) at s = 0.
double expected_improvement(const GpPosterior& post, double x, double f_best);

}  // namespace potbo
