#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "potbo/diagnostics.hpp"
#include "potbo/sample.hpp"

namespace potbo {

struct Ingested {
  Sample sample;
  std::size_t skipped = 0;  // blank lines and non-finite entries
};

//! Reads observations from a single-column numeric file or from a CSV with
//! a header. `column` selects the CSV column by name or 0-based index; it
//! may stay empty for single-column inputs. Blank and non-finite entries
//! are skipped and counted; anything unparseable raises FormatError with
//! the line number.
Ingested ingest(const std::filesystem::path& path, const std::string& column = "");

//! Shortest round-trip decimal form; "inf"/"nan" for non-finite values.
std::string fmt_double(double x);

void write_text_file(const std::filesystem::path& path, const std::string& content);

//! One value per line, bit-exact round trip.
void write_sample_file(const std::filesystem::path& path, const Sample& sample);

void write_mean_excess_csv(const std::filesystem::path& path,
                           std::span<const MeanExcessPoint> series);
void write_stability_csv(const std::filesystem::path& path, const StabilitySeries& series);
void write_linearity_csv(const std::filesystem::path& path,
                         std::span<const LinearitySummary> summaries);
void write_probability_csv(const std::filesystem::path& path,
                           std::span<const ProbabilityPoint> series);
void write_quantile_csv(const std::filesystem::path& path, std::span<const QuantilePoint> series);
void write_return_level_csv(const std::filesystem::path& path,
                            std::span<const ReturnLevelPoint> series);
void write_density_csv(const std::filesystem::path& path, const DensitySeries& series);

}  // namespace potbo
