#pragma once

#include <cstdint>
#include <random>

namespace potbo {

//! Deterministic random source. The engine is std::mt19937_64 and every
//! transform below is written out explicitly, so a given seed produces the
//! same stream on every platform. One variate may consume several engine
//! words; the consumption order is part of the contract.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  //! Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  //! Uniform on the open interval (0, 1); safe under log().
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  //! Standard normal via Box-Muller (cosine branch, two words per draw).
  double normal();

  //! Exponential with the given scale (mean).
  double exponential(double scale);

  //! Gamma(shape, scale) by Marsaglia-Tsang squeeze sampling.
  double gamma(double shape, double scale);

private:
  std::mt19937_64 engine_;
};

}  // namespace potbo
