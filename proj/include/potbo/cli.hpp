#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "potbo/bayesopt.hpp"
#include "potbo/diagnostics.hpp"
#include "potbo/io.hpp"
#include "potbo/synth.hpp"

namespace potbo {

//! Everything a command run needs; echoed verbatim into reports.
struct RunConfig {
  std::string input;                        // file path; empty when a generator is used
  std::string column;                       // CSV column name or 0-based index
  std::optional<GeneratorSpec> generator;

  double range_lo = 0.0;                    // select: search range, required
  double range_hi = 0.0;
  bool has_range = false;
  double fixed_threshold = 0.0;             // fit: required
  bool has_threshold = false;

  std::size_t bo_init = 5;
  std::size_t bo_iters = 25;
  std::uint64_t seed = 0;
  std::size_t score_grid = 2048;
  std::size_t threshold_count = 50;
  double ci_level = 0.95;
  std::size_t bins = 30;
  std::string out_dir;
};

//! Result record for `select` and `fit`: the chosen threshold, the fitted
//! tail, and the full search history. Serializes to JSON losslessly.
struct FitReport {
  std::string tool_version;
  RunConfig config;
  double threshold = 0.0;
  double xi = 0.0;
  double sigma = 0.0;
  double se_xi = 0.0;
  double se_sigma = 0.0;
  double cov_xi_sigma = 0.0;
  double sigma_star = 0.0;
  double sigma_star_se = 0.0;
  std::size_t exceed_count = 0;
  double zeta_u = 0.0;
  double log_likelihood = 0.0;
  double score = 0.0;
  BoTrace trace;
};

bool operator==(const RunConfig& a, const RunConfig& b);
bool operator==(const FitReport& a, const FitReport& b);

std::string serialize_report(const FitReport& report);
FitReport parse_report(const std::string& json_text);

void write_report(const std::filesystem::path& path, const FitReport& report);
FitReport read_report(const std::filesystem::path& path);
void write_trace_csv(const std::filesystem::path& path, const BoTrace& trace);

//! Reads the configured input (file or generator). `skipped`, when given,
//! receives the count of blank/non-finite entries dropped during ingestion.
Sample load_input(const RunConfig& cfg, std::size_t* skipped = nullptr);

//! Mean-excess, stability and linearity series written under out_dir
//! (mean_excess.csv, stability.csv, linearity.csv, index.json).
DiagnosticsBundle run_diagnose(const RunConfig& cfg);

//! Threshold search plus model checks for the winner; writes report.json,
//! trace.csv, prob_plot.csv, qq_plot.csv, return_level.csv, density.csv.
FitReport run_select(const RunConfig& cfg);

//! GPD fit at the user-fixed threshold, same outputs as run_select.
FitReport run_fit(const RunConfig& cfg);

//! Generates a sample and writes it in single-column format.
void run_synth(const GeneratorSpec& spec, const std::filesystem::path& out_file);

}  // namespace potbo
