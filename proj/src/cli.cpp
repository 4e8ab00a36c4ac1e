#include "potbo/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "potbo/errors.hpp"
#include "potbo/version.hpp"

namespace potbo {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

ordered_json generator_to_json(const GeneratorSpec& spec) {
  ordered_json j;
  if (const auto* g = std::get_if<GaussianSpec>(&spec.family)) {
    j["family"] = "gaussian";
    j["mean"] = g->mean;
    j["sd"] = g->sd;
  } else if (const auto* g = std::get_if<GammaSpec>(&spec.family)) {
    j["family"] = "gamma";
    j["shape"] = g->shape;
    j["scale"] = g->scale;
    j["shift"] = g->shift;
  } else if (const auto* g = std::get_if<Ar1Spec>(&spec.family)) {
    j["family"] = "ar1";
    j["phi"] = g->phi;
    j["noise_sd"] = g->noise_sd;
  }
  j["length"] = spec.length;
  j["seed"] = spec.seed;
  return j;
}

GeneratorSpec generator_from_json(const ordered_json& j) {
  GeneratorSpec spec;
  const std::string family = j.at("family");
  if (family == "gaussian") {
    spec.family = GaussianSpec{j.at("mean"), j.at("sd")};
  } else if (family == "gamma") {
    spec.family = GammaSpec{j.at("shape"), j.at("scale"), j.at("shift")};
  } else if (family == "ar1") {
    spec.family = Ar1Spec{j.at("phi"), j.at("noise_sd")};
  } else {
    throw DataError("unknown generator family '" + family + "'");
  }
  spec.length = j.at("length");
  spec.seed = j.at("seed");
  return spec;
}

ordered_json config_to_json(const RunConfig& cfg) {
  ordered_json j;
  j["input"] = cfg.input;
  j["column"] = cfg.column;
  j["generator"] = cfg.generator ? generator_to_json(*cfg.generator) : ordered_json(nullptr);
  j["range"] = cfg.has_range ? ordered_json({cfg.range_lo, cfg.range_hi}) : ordered_json(nullptr);
  j["threshold"] = cfg.has_threshold ? ordered_json(cfg.fixed_threshold) : ordered_json(nullptr);
  j["bo_init"] = cfg.bo_init;
  j["bo_iters"] = cfg.bo_iters;
  j["seed"] = cfg.seed;
  j["score_grid"] = cfg.score_grid;
  j["threshold_count"] = cfg.threshold_count;
  j["ci_level"] = cfg.ci_level;
  j["bins"] = cfg.bins;
  j["out_dir"] = cfg.out_dir;
  return j;
}

RunConfig config_from_json(const ordered_json& j) {
  RunConfig cfg;
  cfg.input = j.at("input");
  cfg.column = j.at("column");
  if (!j.at("generator").is_null()) cfg.generator = generator_from_json(j.at("generator"));
  if (!j.at("range").is_null()) {
    cfg.has_range = true;
    cfg.range_lo = j.at("range").at(0);
    cfg.range_hi = j.at("range").at(1);
  }
  if (!j.at("threshold").is_null()) {
    cfg.has_threshold = true;
    cfg.fixed_threshold = j.at("threshold");
  }
  cfg.bo_init = j.at("bo_init");
  cfg.bo_iters = j.at("bo_iters");
  cfg.seed = j.at("seed");
  cfg.score_grid = j.at("score_grid");
  cfg.threshold_count = j.at("threshold_count");
  cfg.ci_level = j.at("ci_level");
  cfg.bins = j.at("bins");
  cfg.out_dir = j.at("out_dir");
  return cfg;
}

ordered_json fit_to_json(const GpdFit& fit) {
  ordered_json j;
  j["xi"] = fit.params.xi;
  j["sigma"] = fit.params.sigma;
  j["threshold"] = fit.threshold;
  j["n_excess"] = fit.exceed_count;
  j["zeta_u"] = fit.zeta_u;
  j["log_likelihood"] = fit.log_likelihood;
  j["se_xi"] = fit.se_xi;
  j["se_sigma"] = fit.se_sigma;
  j["cov_xi_sigma"] = fit.cov_xi_sigma;
  return j;
}

GpdFit fit_from_json(const ordered_json& j) {
  GpdFit fit;
  fit.params.xi = j.at("xi");
  fit.params.sigma = j.at("sigma");
  fit.threshold = j.at("threshold");
  fit.exceed_count = j.at("n_excess");
  fit.zeta_u = j.at("zeta_u");
  fit.log_likelihood = j.at("log_likelihood");
  fit.se_xi = j.at("se_xi");
  fit.se_sigma = j.at("se_sigma");
  fit.cov_xi_sigma = j.at("cov_xi_sigma");
  return fit;
}

ordered_json trace_to_json(const BoTrace& trace) {
  ordered_json j;
  j["search_lo"] = trace.search_lo;
  j["search_hi"] = trace.search_hi;
  j["best_index"] = trace.best_index;
  ordered_json evals = ordered_json::array();
  for (const TraceEntry& e : trace.evaluations) {
    ordered_json je;
    je["u"] = e.threshold;
    je["ok"] = e.ok();
    je["score"] = e.ok() ? ordered_json(e.score) : ordered_json(nullptr);
    je["n_excess"] = e.exceed_count;
    je["error"] = e.error;
    je["fit"] = e.fit ? fit_to_json(*e.fit) : ordered_json(nullptr);
    evals.push_back(std::move(je));
  }
  j["evaluations"] = std::move(evals);
  return j;
}

BoTrace trace_from_json(const ordered_json& j) {
  BoTrace trace;
  trace.search_lo = j.at("search_lo");
  trace.search_hi = j.at("search_hi");
  trace.best_index = j.at("best_index");
  for (const auto& je : j.at("evaluations")) {
    TraceEntry e;
    e.threshold = je.at("u");
    e.score = je.at("score").is_null() ? kInf : je.at("score").get<double>();
    e.exceed_count = je.at("n_excess");
    e.error = je.at("error");
    if (!je.at("fit").is_null()) e.fit = fit_from_json(je.at("fit"));
    trace.evaluations.push_back(std::move(e));
  }
  return trace;
}

bool fit_equal(const GpdFit& a, const GpdFit& b) {
  return a.params.xi == b.params.xi && a.params.sigma == b.params.sigma &&
         a.threshold == b.threshold && a.exceed_count == b.exceed_count &&
         a.zeta_u == b.zeta_u && a.log_likelihood == b.log_likelihood && a.se_xi == b.se_xi &&
         a.se_sigma == b.se_sigma && a.cov_xi_sigma == b.cov_xi_sigma;
}

bool trace_equal(const BoTrace& a, const BoTrace& b) {
  if (a.search_lo != b.search_lo || a.search_hi != b.search_hi ||
      a.best_index != b.best_index || a.evaluations.size() != b.evaluations.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.evaluations.size(); ++i) {
    const TraceEntry& x = a.evaluations[i];
    const TraceEntry& y = b.evaluations[i];
    if (x.threshold != y.threshold || x.score != y.score || x.exceed_count != y.exceed_count ||
        x.error != y.error || x.fit.has_value() != y.fit.has_value()) {
      return false;
    }
    if (x.fit && !fit_equal(*x.fit, *y.fit)) return false;
  }
  return true;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
}

BoConfig bo_config(const RunConfig& cfg) {
  BoConfig bo;
  bo.init_points = cfg.bo_init;
  bo.iterations = cfg.bo_iters;
  bo.score.grid_points = cfg.score_grid;
  return bo;
}

FitReport assemble_report(const RunConfig& cfg, const BoTrace& trace) {
  const ScoreEvaluation best = trace.best_evaluation();
  FitReport r;
  r.tool_version = kVersion;
  r.config = cfg;
  r.threshold = best.threshold;
  r.xi = best.fit.params.xi;
  r.sigma = best.fit.params.sigma;
  r.se_xi = best.fit.se_xi;
  r.se_sigma = best.fit.se_sigma;
  r.cov_xi_sigma = best.fit.cov_xi_sigma;
  const auto [ss, ss_se] = sigma_star(best.fit);
  r.sigma_star = ss;
  r.sigma_star_se = ss_se;
  r.exceed_count = best.fit.exceed_count;
  r.zeta_u = best.fit.zeta_u;
  r.log_likelihood = best.fit.log_likelihood;
  r.score = best.score;
  r.trace = trace;
  return r;
}

//! Model-check series for the winning fit, written next to the report.
void write_model_checks(const RunConfig& cfg, const Sample& sample, const GpdFit& fit,
                        DiagnosticsBundle* bundle) {
  const ExcessSet e = excesses_over(sample, fit.threshold);
  auto [prob, quant] = probability_quantile_plots(fit, e);
  const std::vector<double> periods = default_return_periods(fit);
  std::vector<ReturnLevelPoint> levels = return_level_series(fit, periods, cfg.ci_level);
  DensitySeries density = density_series(fit, e, cfg.bins);

  const std::filesystem::path dir(cfg.out_dir);
  write_probability_csv(dir / "prob_plot.csv", prob);
  write_quantile_csv(dir / "qq_plot.csv", quant);
  write_return_level_csv(dir / "return_level.csv", levels);
  write_density_csv(dir / "density.csv", density);

  bundle->probability_plot = std::move(prob);
  bundle->quantile_plot = std::move(quant);
  bundle->return_level = std::move(levels);
  bundle->density = std::move(density);
}

}  // namespace

bool operator==(const RunConfig& a, const RunConfig& b) {
  return config_to_json(a) == config_to_json(b);
}

bool operator==(const FitReport& a, const FitReport& b) {
  return a.tool_version == b.tool_version && a.config == b.config && a.threshold == b.threshold &&
         a.xi == b.xi && a.sigma == b.sigma && a.se_xi == b.se_xi && a.se_sigma == b.se_sigma &&
         a.cov_xi_sigma == b.cov_xi_sigma && a.sigma_star == b.sigma_star &&
         a.sigma_star_se == b.sigma_star_se && a.exceed_count == b.exceed_count &&
         a.zeta_u == b.zeta_u && a.log_likelihood == b.log_likelihood && a.score == b.score &&
         trace_equal(a.trace, b.trace);
}

std::string serialize_report(const FitReport& report) {
  ordered_json j;
  j["tool"] = {{"name", "potbo"}, {"version", report.tool_version}};
  j["config"] = config_to_json(report.config);
  ordered_json sel;
  sel["threshold"] = report.threshold;
  sel["xi"] = report.xi;
  sel["sigma"] = report.sigma;
  sel["se_xi"] = report.se_xi;
  sel["se_sigma"] = report.se_sigma;
  sel["cov_xi_sigma"] = report.cov_xi_sigma;
  sel["sigma_star"] = report.sigma_star;
  sel["sigma_star_se"] = report.sigma_star_se;
  sel["n_excess"] = report.exceed_count;
  sel["zeta_u"] = report.zeta_u;
  sel["log_likelihood"] = report.log_likelihood;
  sel["score"] = report.score;
  j["selected"] = std::move(sel);
  j["trace"] = trace_to_json(report.trace);
  return j.dump(2) + "\n";
}

FitReport parse_report(const std::string& json_text) {
  const ordered_json j = ordered_json::parse(json_text);
  FitReport r;
  r.tool_version = j.at("tool").at("version");
  r.config = config_from_json(j.at("config"));
  const ordered_json& sel = j.at("selected");
  r.threshold = sel.at("threshold");
  r.xi = sel.at("xi");
  r.sigma = sel.at("sigma");
  r.se_xi = sel.at("se_xi");
  r.se_sigma = sel.at("se_sigma");
  r.cov_xi_sigma = sel.at("cov_xi_sigma");
  r.sigma_star = sel.at("sigma_star");
  r.sigma_star_se = sel.at("sigma_star_se");
  r.exceed_count = sel.at("n_excess");
  r.zeta_u = sel.at("zeta_u");
  r.log_likelihood = sel.at("log_likelihood");
  r.score = sel.at("score");
  r.trace = trace_from_json(j.at("trace"));
  return r;
}

void write_report(const std::filesystem::path& path, const FitReport& report) {
  write_text_file(path, serialize_report(report));
}

FitReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_report(ss.str());
}

void write_trace_csv(const std::filesystem::path& path, const BoTrace& trace) {
  std::ostringstream os;
  os << "iter,u,score,xi,sigma,n_excess\n";
  for (std::size_t i = 0; i < trace.evaluations.size(); ++i) {
    const TraceEntry& e = trace.evaluations[i];
    os << i << ',' << fmt_double(e.threshold) << ',' << fmt_double(e.score) << ','
       << fmt_double(e.fit ? e.fit->params.xi : std::nan("")) << ','
       << fmt_double(e.fit ? e.fit->params.sigma : std::nan("")) << ',' << e.exceed_count
       << '\n';
  }
  write_text_file(path, os.str());
}

Sample load_input(const RunConfig& cfg, std::size_t* skipped) {
  if (cfg.generator && !cfg.input.empty()) {
    throw DomainError("give either an input file or a generator, not both");
  }
  if (cfg.generator) {
    if (skipped) *skipped = 0;
    return generate(*cfg.generator);
  }
  if (cfg.input.empty()) throw DomainError("no input file or generator configured");
  Ingested in = ingest(cfg.input, cfg.column);
  if (skipped) *skipped = in.skipped;
  return std::move(in.sample);
}

DiagnosticsBundle run_diagnose(const RunConfig& cfg) {
  if (cfg.out_dir.empty()) throw DomainError("diagnose: output directory required");
  const Sample sample = load_input(cfg);

  DiagnosticsConfig dcfg;
  dcfg.threshold_count = cfg.threshold_count;
  dcfg.ci_level = cfg.ci_level;
  const std::vector<double> grid = default_threshold_grid(sample, dcfg);

  DiagnosticsBundle bundle;
  bundle.mean_excess = mean_excess_series(sample, grid, dcfg.min_mean_excess);
  bundle.stability = stability_series(sample, grid, cfg.ci_level);

  auto column = [](const auto& series, auto proj) {
    std::vector<double> v;
    v.reserve(series.size());
    for (const auto& p : series) v.push_back(proj(p));
    return v;
  };
  const auto me_u = column(bundle.mean_excess, [](const auto& p) { return p.u; });
  const auto me_v = column(bundle.mean_excess, [](const auto& p) { return p.mean; });
  const auto xi_u = column(bundle.stability.xi, [](const auto& p) { return p.u; });
  const auto xi_v = column(bundle.stability.xi, [](const auto& p) { return p.value; });
  const auto ss_u = column(bundle.stability.sigma_star, [](const auto& p) { return p.u; });
  const auto ss_v = column(bundle.stability.sigma_star, [](const auto& p) { return p.value; });
  bundle.linearity.push_back(linear_summary("mean_excess", me_u, me_v));
  bundle.linearity.push_back(linear_summary("xi", xi_u, xi_v));
  bundle.linearity.push_back(linear_summary("sigma_star", ss_u, ss_v));

  const std::filesystem::path dir(cfg.out_dir);
  ensure_dir(dir);
  write_mean_excess_csv(dir / "mean_excess.csv", bundle.mean_excess);
  write_stability_csv(dir / "stability.csv", bundle.stability);
  write_linearity_csv(dir / "linearity.csv", bundle.linearity);

  ordered_json index;
  index["tool"] = {{"name", "potbo"}, {"version", kVersion}};
  index["command"] = "diagnose";
  index["source"] = sample.source;
  index["n"] = sample.size();
  index["files"] = {{"mean_excess", "mean_excess.csv"},
                    {"stability", "stability.csv"},
                    {"linearity", "linearity.csv"}};
  ordered_json lin = ordered_json::array();
  for (const auto& s : bundle.linearity) {
    lin.push_back({{"series", s.series},
                   {"slope", s.slope},
                   {"intercept", s.intercept},
                   {"r2", s.r2},
                   {"u_lo", s.u_lo},
                   {"u_hi", s.u_hi}});
  }
  index["linearity"] = std::move(lin);
  ordered_json skipped = ordered_json::array();
  for (const auto& s : bundle.stability.skipped) {
    skipped.push_back({{"u", s.u}, {"reason", s.reason}});
  }
  index["skipped_thresholds"] = std::move(skipped);
  write_text_file(dir / "index.json", index.dump(2) + "\n");

  return bundle;
}

FitReport run_select(const RunConfig& cfg) {
  if (!cfg.has_range) throw DomainError("select: search range required (--range LO,HI)");
  if (!(cfg.range_lo < cfg.range_hi)) throw DomainError("select: range lo must be below hi");
  if (cfg.out_dir.empty()) throw DomainError("select: output directory required");
  const Sample sample = load_input(cfg);

  const BoTrace trace = select_threshold(sample, cfg.range_lo, cfg.range_hi, bo_config(cfg));
  FitReport report = assemble_report(cfg, trace);

  const std::filesystem::path dir(cfg.out_dir);
  ensure_dir(dir);
  write_report(dir / "report.json", report);
  write_trace_csv(dir / "trace.csv", trace);
  DiagnosticsBundle bundle;
  write_model_checks(cfg, sample, trace.best_evaluation().fit, &bundle);
  return report;
}

FitReport run_fit(const RunConfig& cfg) {
  if (!cfg.has_threshold) throw DomainError("fit: threshold required (--threshold U)");
  if (cfg.out_dir.empty()) throw DomainError("fit: output directory required");
  const Sample sample = load_input(cfg);

  ScoreConfig scfg;
  scfg.grid_points = cfg.score_grid;
  const ScoreEvaluation ev = score(sample, cfg.fixed_threshold, scfg);

  BoTrace trace;
  trace.search_lo = cfg.fixed_threshold;
  trace.search_hi = cfg.fixed_threshold;
  TraceEntry entry;
  entry.threshold = ev.threshold;
  entry.score = ev.score;
  entry.fit = ev.fit;
  entry.exceed_count = ev.exceed_count;
  trace.evaluations.push_back(std::move(entry));
  trace.best_index = 0;

  FitReport report = assemble_report(cfg, trace);
  const std::filesystem::path dir(cfg.out_dir);
  ensure_dir(dir);
  write_report(dir / "report.json", report);
  write_trace_csv(dir / "trace.csv", trace);
  DiagnosticsBundle bundle;
  write_model_checks(cfg, sample, ev.fit, &bundle);
  return report;
}

void run_synth(const GeneratorSpec& spec, const std::filesystem::path& out_file) {
  const Sample sample = generate(spec);
  if (out_file.has_parent_path()) ensure_dir(out_file.parent_path());
  write_sample_file(out_file, sample);
}

}  // namespace potbo
