#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "potbo/errors.hpp"
#include "potbo/gpr.hpp"
#include "potbo/score.hpp"

namespace potbo {

struct BoConfig {
  std::size_t init_points = 5;   // evenly spaced initial design, endpoints included
  std::size_t iterations = 25;   // surrogate-guided evaluations after the design
  std::size_t candidates = 512;  // acquisition is maximized over this dense grid
  ScoreConfig score;
  GprConfig gpr;
};

//! One objective evaluation in the search history. Failed evaluations keep
//! the +inf sentinel score and the failure reason; they are excluded from
//! surrogate training.
struct TraceEntry {
  double threshold = 0.0;
  double score = 0.0;
  std::optional<GpdFit> fit;
  std::size_t exceed_count = 0;
  std::string error;

  bool ok() const { return fit.has_value(); }
};

//! Full optimization history over the search range [search_lo, search_hi].
struct BoTrace {
  double search_lo = 0.0;
  double search_hi = 0.0;
  std::vector<TraceEntry> evaluations;
  std::size_t best_index = 0;

  const TraceEntry& best() const { return evaluations[best_index]; }
  ScoreEvaluation best_evaluation() const;
};

//! Raised when fewer than two evaluations succeed; carries the attempts.
class SelectionError : public NumericError {
public:
  SelectionError(const std::string& msg, BoTrace trace)
    : NumericError(msg), trace_(std::move(trace)) {}
  const BoTrace& trace() const { return trace_; }

private:
  BoTrace trace_;
};

using Objective = std::function<ScoreEvaluation(double)>;

//! Generic driver: initial design, then iterate GP fit / expected-improvement
//! proposal / evaluation, and return the argmin over everything evaluated.
//! Ties in acquisition or in the final argmin break toward the smaller u.
BoTrace run_bayesopt(const Objective& objective, double lo, double hi, const BoConfig& cfg);

//! The threshold selector: run_bayesopt with the L1 score as objective.
BoTrace select_threshold(const Sample& sample, double lo, double hi, const BoConfig& cfg = {});

}  // namespace potbo
