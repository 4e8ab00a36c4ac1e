#include "potbo/gpd.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "potbo/errors.hpp"
#include "potbo/rng.hpp"

namespace potbo {

void validate(const GpdParams& p) {
  if (!std::isfinite(p.xi) || !std::isfinite(p.sigma) || !(p.sigma > 0.0)) {
    throw DomainError("invalid GPD parameters: require finite xi and sigma > 0");
  }
}

double gpd_support_upper(const GpdParams& p) {
  validate(p);
  if (p.xi < 0.0) return -p.sigma / p.xi;
  return std::numeric_limits<double>::infinity();
}

double gpd_cdf(const GpdParams& p, double y) {
  validate(p);
  if (!std::isfinite(y)) throw DomainError("gpd_cdf: non-finite argument");
  if (y <= 0.0) return 0.0;
  if (std::abs(p.xi) < kXiZeroTol) return -std::expm1(-y / p.sigma);
  const double t = p.xi * y / p.sigma;
  if (1.0 + t <= 0.0) return 1.0;  // at or beyond the upper endpoint (xi < 0)
  return -std::expm1(-std::log1p(t) / p.xi);
}

double gpd_pdf(const GpdParams& p, double y) {
  validate(p);
  if (!std::isfinite(y)) throw DomainError("gpd_pdf: non-finite argument");
  if (y < 0.0) return 0.0;
  if (std::abs(p.xi) < kXiZeroTol) return std::exp(-y / p.sigma) / p.sigma;
  const double t = p.xi * y / p.sigma;
  if (1.0 + t <= 0.0) return 0.0;
  return std::exp(-(1.0 / p.xi + 1.0) * std::log1p(t)) / p.sigma;
}

double gpd_quantile(const GpdParams& p, double q) {
  validate(p);
  if (!(q > 0.0 && q < 1.0)) throw DomainError("gpd_quantile: level outside (0,1)");
  if (std::abs(p.xi) < kXiZeroTol) return -p.sigma * std::log1p(-q);
  // sigma/xi * ((1-q)^{-xi} - 1), evaluated as expm1 of -xi*log(1-q).
  return p.sigma / p.xi * std::expm1(-p.xi * std::log1p(-q));
}

Sample gpd_sample(const GpdParams& p, std::size_t n, std::uint64_t seed) {
  validate(p);
  if (n == 0) throw DomainError("gpd_sample: n must be at least 1");
  Rng rng(seed);
  Sample s;
  s.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.values.push_back(gpd_quantile(p, rng.uniform_open()));
  std::ostringstream os;
  os << "gpd(xi=" << p.xi << ",sigma=" << p.sigma << ",n=" << n << ",seed=" << seed << ")";
  s.source = os.str();
  return s;
}

}  // namespace potbo
