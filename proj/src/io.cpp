#include "potbo/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "potbo/errors.hpp"

namespace potbo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_double(std::string_view s, double* out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (!lines.empty() && lines.front().rfind("\xEF\xBB\xBF", 0) == 0) {
    lines.front().erase(0, 3);  // UTF-8 BOM
  }
  return lines;
}

std::size_t resolve_column(const std::vector<std::string_view>& header,
                           const std::string& column) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) return i;
  }
  std::size_t idx = 0;
  const auto [ptr, ec] = std::from_chars(column.data(), column.data() + column.size(), idx);
  if (ec == std::errc{} && ptr == column.data() + column.size() && idx < header.size()) {
    return idx;
  }
  throw DomainError("column '" + column + "' not found in CSV header");
}

}  // namespace

Ingested ingest(const std::filesystem::path& path, const std::string& column) {
  const std::vector<std::string> lines = read_lines(path);

  std::size_t first = 0;
  while (first < lines.size() && trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw EmptyDataError("no data in " + path.string());

  Ingested out;
  out.sample.source = path.string();

  double probe = 0.0;
  const bool single_column = column.empty() && parse_double(trim(lines[first]), &probe);

  auto take = [&](double v, std::size_t lineno) {
    (void)lineno;
    if (!std::isfinite(v)) {
      ++out.skipped;
      return;
    }
    out.sample.values.push_back(v);
  };

  if (single_column) {
    for (std::size_t i = first; i < lines.size(); ++i) {
      const std::string_view s = trim(lines[i]);
      if (s.empty()) {
        ++out.skipped;
        continue;
      }
      double v = 0.0;
      if (!parse_double(s, &v)) {
        throw FormatError("cannot parse value '" + std::string(s) + "'", i + 1);
      }
      take(v, i + 1);
    }
  } else {
    const std::vector<std::string_view> header = split_csv(trim(lines[first]));
    std::size_t idx = 0;
    if (column.empty()) {
      if (header.size() != 1) {
        throw DomainError("CSV has " + std::to_string(header.size()) +
                          " columns; select one with --column");
      }
    } else {
      idx = resolve_column(header, column);
    }
    for (std::size_t i = first + 1; i < lines.size(); ++i) {
      const std::string_view s = trim(lines[i]);
      if (s.empty()) {
        ++out.skipped;
        continue;
      }
      const std::vector<std::string_view> fields = split_csv(s);
      if (idx >= fields.size()) throw FormatError("row has too few fields", i + 1);
      if (fields[idx].empty()) {
        ++out.skipped;
        continue;
      }
      double v = 0.0;
      if (!parse_double(fields[idx], &v)) {
        throw FormatError("cannot parse value '" + std::string(fields[idx]) + "'", i + 1);
      }
      take(v, i + 1);
    }
  }

  if (out.sample.values.empty()) {
    throw EmptyDataError("no usable values in " + path.string());
  }
  return out;
}

std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream o(path, std::ios::binary | std::ios::trunc);
  if (!o) throw IoError("cannot write " + path.string());
  o << content;
  if (!o) throw IoError("write failed for " + path.string());
}

void write_sample_file(const std::filesystem::path& path, const Sample& sample) {
  std::ostringstream os;
  for (const double v : sample.values) os << fmt_double(v) << '\n';
  write_text_file(path, os.str());
}

void write_mean_excess_csv(const std::filesystem::path& path,
                           std::span<const MeanExcessPoint> series) {
  std::ostringstream os;
  os << "u,mean_excess,se,n_excess\n";
  for (const auto& p : series) {
    os << fmt_double(p.u) << ',' << fmt_double(p.mean) << ',' << fmt_double(p.se) << ',' << p.n
       << '\n';
  }
  write_text_file(path, os.str());
}

void write_stability_csv(const std::filesystem::path& path, const StabilitySeries& series) {
  std::ostringstream os;
  os << "u,xi,xi_lo,xi_hi,sigma_star,sigma_star_lo,sigma_star_hi,n_excess\n";
  for (std::size_t i = 0; i < series.xi.size(); ++i) {
    const auto& x = series.xi[i];
    const auto& s = series.sigma_star[i];
    os << fmt_double(x.u) << ',' << fmt_double(x.value) << ',' << fmt_double(x.lo) << ','
       << fmt_double(x.hi) << ',' << fmt_double(s.value) << ',' << fmt_double(s.lo) << ','
       << fmt_double(s.hi) << ',' << x.n << '\n';
  }
  write_text_file(path, os.str());
}

void write_linearity_csv(const std::filesystem::path& path,
                         std::span<const LinearitySummary> summaries) {
  std::ostringstream os;
  os << "series,slope,intercept,r2,u_lo,u_hi\n";
  for (const auto& s : summaries) {
    os << s.series << ',' << fmt_double(s.slope) << ',' << fmt_double(s.intercept) << ','
       << fmt_double(s.r2) << ',' << fmt_double(s.u_lo) << ',' << fmt_double(s.u_hi) << '\n';
  }
  write_text_file(path, os.str());
}

void write_probability_csv(const std::filesystem::path& path,
                           std::span<const ProbabilityPoint> series) {
  std::ostringstream os;
  os << "empirical,model\n";
  for (const auto& p : series) {
    os << fmt_double(p.empirical) << ',' << fmt_double(p.model) << '\n';
  }
  write_text_file(path, os.str());
}

void write_quantile_csv(const std::filesystem::path& path,
                        std::span<const QuantilePoint> series) {
  std::ostringstream os;
  os << "model,empirical\n";
  for (const auto& p : series) {
    os << fmt_double(p.model) << ',' << fmt_double(p.empirical) << '\n';
  }
  write_text_file(path, os.str());
}

void write_return_level_csv(const std::filesystem::path& path,
                            std::span<const ReturnLevelPoint> series) {
  std::ostringstream os;
  os << "m,level,lo,hi\n";
  for (const auto& p : series) {
    os << fmt_double(p.m) << ',' << fmt_double(p.level) << ',' << fmt_double(p.lo) << ','
       << fmt_double(p.hi) << '\n';
  }
  write_text_file(path, os.str());
}

void write_density_csv(const std::filesystem::path& path, const DensitySeries& series) {
  std::ostringstream os;
  os << "bin_lo,bin_hi,hist_density,fit_density\n";
  for (std::size_t i = 0; i < series.hist.size(); ++i) {
    os << fmt_double(series.bin_lo[i]) << ',' << fmt_double(series.bin_hi[i]) << ','
       << fmt_double(series.hist[i]) << ',' << fmt_double(series.fit_at_center[i]) << '\n';
  }
  write_text_file(path, os.str());
}

}  // namespace potbo
