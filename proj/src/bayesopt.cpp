#include "potbo/bayesopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace potbo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TraceEntry evaluate(const Objective& objective, double u) {
  TraceEntry entry;
  entry.threshold = u;
  try {
    ScoreEvaluation ev = objective(u);
    entry.score = ev.score;
    entry.fit = ev.fit;
    entry.exceed_count = ev.exceed_count;
  } catch (const Error& e) {
    entry.score = kInf;
    entry.error = e.what();
  }
  return entry;
}

// Midpoint of the widest gap between evaluated thresholds (range ends
// included); keeps the loop exploring when no surrogate can be built.
double widest_gap_midpoint(const std::vector<TraceEntry>& entries, double lo, double hi) {
  std::vector<double> us{lo, hi};
  for (const TraceEntry& e : entries) us.push_back(e.threshold);
  std::sort(us.begin(), us.end());
  double best_mid = 0.5 * (lo + hi);
  double best_gap = -1.0;
  for (std::size_t i = 1; i < us.size(); ++i) {
    const double gap = us[i] - us[i - 1];
    if (gap > best_gap) {
      best_gap = gap;
      best_mid = 0.5 * (us[i - 1] + us[i]);
    }
  }
  return best_mid;
}

}  // namespace

ScoreEvaluation BoTrace::best_evaluation() const {
  const TraceEntry& b = best();
  ScoreEvaluation ev;
  ev.threshold = b.threshold;
  ev.score = b.score;
  ev.fit = *b.fit;
  ev.exceed_count = b.exceed_count;
  return ev;
}

BoTrace run_bayesopt(const Objective& objective, double lo, double hi, const BoConfig& cfg) {
  if (!(lo < hi)) throw DomainError("run_bayesopt: lo must be below hi");
  if (cfg.init_points < 2) throw DomainError("run_bayesopt: need at least two initial points");
  if (cfg.candidates < 2) throw DomainError("run_bayesopt: need at least two candidates");

  BoTrace trace;
  trace.search_lo = lo;
  trace.search_hi = hi;

  // Both grids are uniform over the open range: the selector can approach
  // the ends arbitrarily closely but never returns exactly lo or hi.
  const auto k = cfg.init_points;
  for (std::size_t i = 0; i < k; ++i) {
    const double u =
        lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(k + 1);
    trace.evaluations.push_back(evaluate(objective, u));
  }

  std::vector<double> cand(cfg.candidates);
  for (std::size_t i = 0; i < cfg.candidates; ++i) {
    cand[i] =
        lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(cfg.candidates + 1);
  }

  for (std::size_t j = 0; j < cfg.iterations; ++j) {
    std::vector<double> xs, ys;
    double f_best = kInf;
    for (const TraceEntry& e : trace.evaluations) {
      if (!e.ok()) continue;
      xs.push_back(e.threshold);
      ys.push_back(e.score);
      f_best = std::min(f_best, e.score);
    }

    const auto already_evaluated = [&](double u) {
      return std::any_of(trace.evaluations.begin(), trace.evaluations.end(),
                         [&](const TraceEntry& e) { return std::abs(e.threshold - u) < 1e-9; });
    };

    double next = kInf;
    bool have_next = false;
    if (xs.size() >= 2) {
      try {
        const GpPosterior post = gpr_fit(xs, ys, cfg.gpr);
        double best_ei = -1.0;
        for (const double c : cand) {
          if (already_evaluated(c)) continue;
          const double ei = expected_improvement(post, c, f_best);
          if (ei > best_ei) {
            best_ei = ei;
            next = c;
            have_next = true;
          }
        }
      } catch (const Error&) {
        have_next = false;
      }
    }
    if (!have_next) next = widest_gap_midpoint(trace.evaluations, lo, hi);

    trace.evaluations.push_back(evaluate(objective, next));
  }

  std::size_t n_ok = 0;
  bool have_best = false;
  for (std::size_t i = 0; i < trace.evaluations.size(); ++i) {
    const TraceEntry& e = trace.evaluations[i];
    if (!e.ok()) continue;
    ++n_ok;
    if (!have_best || e.score < trace.best().score ||
        (e.score == trace.best().score && e.threshold < trace.best().threshold)) {
      trace.best_index = i;
      have_best = true;
    }
  }
  if (n_ok < 2) {
    throw SelectionError("threshold selection failed: fewer than two evaluations succeeded",
                         std::move(trace));
  }
  return trace;
}

BoTrace select_threshold(const Sample& sample, double lo, double hi, const BoConfig& cfg) {
  const Objective objective = [&](double u) { return score(sample, u, cfg.score); };
  return run_bayesopt(objective, lo, hi, cfg);
}

}  // namespace potbo
