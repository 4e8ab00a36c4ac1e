#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "potbo/sample.hpp"

namespace potbo {

struct GaussianSpec {
  double mean = 0.0;
  double sd = 1.0;
};

struct GammaSpec {
  double shape = 1.0;
  double scale = 1.0;
  double shift = 0.0;
};

//! x_t = phi * x_{t-1} + eps_t, started from the stationary distribution.
struct Ar1Spec {
  double phi = 0.5;
  double noise_sd = 1.0;
};

struct GeneratorSpec {
  std::variant<GaussianSpec, GammaSpec, Ar1Spec> family = GaussianSpec{};
  std::size_t length = 10000;
  std::uint64_t seed = 0;

  void validate() const;  // throws DomainError
  std::string describe() const;
};

//! Deterministic synthetic series; the sample's source records the spec.
Sample generate(const GeneratorSpec& spec);

}  // namespace potbo
