#include "potbo/excess.hpp"

#include <cmath>
#include <string>

#include "potbo/errors.hpp"

namespace potbo {

ExcessSet excesses_over(const Sample& sample, double u) {
  if (sample.empty()) throw EmptyDataError("excesses_over: empty sample");
  if (!std::isfinite(u)) throw DomainError("excesses_over: non-finite threshold");
  ExcessSet e;
  e.threshold = u;
  e.total_count = sample.size();
  for (const double x : sample.values) {
    if (x > u) e.excesses.push_back(x - u);
  }
  if (e.excesses.empty()) {
    throw EmptyExcessError("no observation exceeds threshold u=" + std::to_string(u));
  }
  return e;
}

}  // namespace potbo
