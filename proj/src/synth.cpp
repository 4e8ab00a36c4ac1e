#include "potbo/synth.hpp"

#include <cmath>
#include <sstream>

#include "potbo/errors.hpp"
#include "potbo/rng.hpp"

namespace potbo {

void GeneratorSpec::validate() const {
  if (length < 1) throw DomainError("generator: length must be at least 1");
  if (const auto* g = std::get_if<GaussianSpec>(&family)) {
    if (!(g->sd > 0.0)) throw DomainError("gaussian: sd must be positive");
  } else if (const auto* g = std::get_if<GammaSpec>(&family)) {
    if (!(g->shape > 0.0)) throw DomainError("gamma: shape must be positive");
    if (!(g->scale > 0.0)) throw DomainError("gamma: scale must be positive");
    if (!std::isfinite(g->shift)) throw DomainError("gamma: shift must be finite");
  } else if (const auto* g = std::get_if<Ar1Spec>(&family)) {
    if (!(std::abs(g->phi) < 1.0)) throw DomainError("ar1: |phi| must be below 1");
    if (!(g->noise_sd > 0.0)) throw DomainError("ar1: noise sd must be positive");
  }
}

std::string GeneratorSpec::describe() const {
  std::ostringstream os;
  if (const auto* g = std::get_if<GaussianSpec>(&family)) {
    os << "gaussian(mean=" << g->mean << ",sd=" << g->sd;
  } else if (const auto* g = std::get_if<GammaSpec>(&family)) {
    os << "gamma(shape=" << g->shape << ",scale=" << g->scale << ",shift=" << g->shift;
  } else if (const auto* g = std::get_if<Ar1Spec>(&family)) {
    os << "ar1(phi=" << g->phi << ",noise_sd=" << g->noise_sd;
  }
  os << ",T=" << length << ",seed=" << seed << ")";
  return os.str();
}

Sample generate(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Sample s;
  s.values.reserve(spec.length);

  if (const auto* g = std::get_if<GaussianSpec>(&spec.family)) {
    for (std::size_t i = 0; i < spec.length; ++i) s.values.push_back(g->mean + g->sd * rng.normal());
  } else if (const auto* g = std::get_if<GammaSpec>(&spec.family)) {
    for (std::size_t i = 0; i < spec.length; ++i) {
      s.values.push_back(g->shift + rng.gamma(g->shape, g->scale));
    }
  } else if (const auto* g = std::get_if<Ar1Spec>(&spec.family)) {
    double x = rng.normal() * g->noise_sd / std::sqrt(1.0 - g->phi * g->phi);
    s.values.push_back(x);
    for (std::size_t i = 1; i < spec.length; ++i) {
      x = g->phi * x + g->noise_sd * rng.normal();
      s.values.push_back(x);
    }
  }

  s.source = spec.describe();
  return s;
}

}  // namespace potbo
