#include "potbo/rng.hpp"

#include <cmath>
#include <numbers>

#include "potbo/errors.hpp"

namespace potbo {

double Rng::normal() {
  const double u1 = uniform_open();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::exponential(double scale) {
  if (!(scale > 0.0)) throw DomainError("exponential scale must be positive");
  return -scale * std::log(uniform_open());
}

double Rng::gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) throw DomainError("gamma parameters must be positive");
  if (shape < 1.0) {
    // Boost a Gamma(shape+1) draw down by U^{1/shape}.
    const double g = gamma(shape + 1.0, 1.0);
    return scale * g * std::pow(uniform_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

}  // namespace potbo
