#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace potbo {

//! An ordered sequence of observations plus a note on where they came from.
struct Sample {
  std::vector<double> values;
  std::string source;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

}  // namespace potbo
