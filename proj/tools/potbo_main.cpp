#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "potbo/cli.hpp"
#include "potbo/errors.hpp"
#include "potbo/version.hpp"

namespace {

struct GeneratorFlags {
  std::string family;
  double mean = 0.0;
  double sd = 1.0;
  double shape = 1.0;
  double scale = 1.0;
  double shift = 0.0;
  double phi = 0.5;
  double noise_sd = 1.0;
  std::size_t length = 10000;
};

void add_generator_flags(CLI::App* cmd, GeneratorFlags* g) {
  cmd->add_option("--family", g->family, "Generate input: gaussian, gamma or ar1")
      ->check(CLI::IsMember({"gaussian", "gamma", "ar1"}));
  cmd->add_option("--mean", g->mean, "Gaussian mean");
  cmd->add_option("--sd", g->sd, "Gaussian standard deviation");
  cmd->add_option("--shape", g->shape, "Gamma shape");
  cmd->add_option("--scale", g->scale, "Gamma scale");
  cmd->add_option("--shift", g->shift, "Gamma location shift");
  cmd->add_option("--phi", g->phi, "AR(1) coefficient");
  cmd->add_option("--noise-sd", g->noise_sd, "AR(1) innovation standard deviation");
  cmd->add_option("--length", g->length, "Series length T");
}

potbo::GeneratorSpec make_spec(const GeneratorFlags& g, std::uint64_t seed) {
  potbo::GeneratorSpec spec;
  if (g.family == "gaussian") {
    spec.family = potbo::GaussianSpec{g.mean, g.sd};
  } else if (g.family == "gamma") {
    spec.family = potbo::GammaSpec{g.shape, g.scale, g.shift};
  } else if (g.family == "ar1") {
    spec.family = potbo::Ar1Spec{g.phi, g.noise_sd};
  } else {
    throw potbo::DomainError("unknown family '" + g.family + "'");
  }
  spec.length = g.length;
  spec.seed = seed;
  return spec;
}

void parse_range(const std::string& text, potbo::RunConfig* cfg) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw potbo::DomainError("--range expects LO,HI");
  }
  try {
    cfg->range_lo = std::stod(text.substr(0, comma));
    cfg->range_hi = std::stod(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw potbo::DomainError("--range expects numeric LO,HI");
  }
  cfg->has_range = true;
}

void finalize_input(const GeneratorFlags& g, potbo::RunConfig* cfg) {
  if (!g.family.empty()) cfg->generator = make_spec(g, cfg->seed);
}

void print_report_summary(const potbo::FitReport& r) {
  std::printf("selected threshold u = %.6g\n", r.threshold);
  std::printf("xi    = %.6g (se %.4g)\n", r.xi, r.se_xi);
  std::printf("sigma = %.6g (se %.4g)\n", r.sigma, r.se_sigma);
  std::printf("excesses = %zu (zeta_u = %.4g), score = %.6g\n", r.exceed_count, r.zeta_u,
              r.score);
  std::printf("report written to %s/report.json\n", r.config.out_dir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"POT threshold selection for extreme value analysis"};
  app.set_version_flag("--version", potbo::kVersion);
  app.require_subcommand(1);

  potbo::RunConfig cfg;
  GeneratorFlags gen;
  std::string range_text;
  std::string synth_output;

  CLI::App* synth = app.add_subcommand("synth", "Write a synthetic series to a file");
  add_generator_flags(synth, &gen);
  synth->add_option("--seed", cfg.seed, "Generator seed");
  synth->add_option("--output", synth_output, "Output file (one value per line)")->required();

  CLI::App* diagnose =
      app.add_subcommand("diagnose", "Mean-excess and stability series for range choice");
  CLI::App* select = app.add_subcommand("select", "Search the threshold over a range");
  CLI::App* fit = app.add_subcommand("fit", "Fit the tail at a fixed threshold");

  for (CLI::App* cmd : {diagnose, select, fit}) {
    cmd->add_option("--input", cfg.input, "Input file (single column, or CSV with header)");
    cmd->add_option("--column", cfg.column, "CSV column name or 0-based index");
    add_generator_flags(cmd, &gen);
    cmd->add_option("--seed", cfg.seed, "Seed for generated input");
    cmd->add_option("--ci", cfg.ci_level, "Confidence level for intervals");
    cmd->add_option("--out", cfg.out_dir, "Output directory")->required();
  }
  diagnose->add_option("--grid", cfg.threshold_count, "Number of diagnostic thresholds");
  select->add_option("--grid", cfg.score_grid, "Density grid points for the score");
  fit->add_option("--grid", cfg.score_grid, "Density grid points for the score");
  select->add_option("--range", range_text, "Search range LO,HI")->required();
  select->add_option("--bo-init", cfg.bo_init, "Initial design size K");
  select->add_option("--bo-iters", cfg.bo_iters, "Optimization iterations L");
  select->add_option("--bins", cfg.bins, "Density-plot histogram bins");
  fit->add_option("--threshold", cfg.fixed_threshold, "Threshold u")->required();
  fit->add_option("--bins", cfg.bins, "Density-plot histogram bins");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(synth)) {
      if (gen.family.empty()) throw potbo::DomainError("synth: --family required");
      potbo::run_synth(make_spec(gen, cfg.seed), synth_output);
      std::printf("wrote %zu values to %s\n", gen.length, synth_output.c_str());
      return 0;
    }
    if (app.got_subcommand(diagnose)) {
      finalize_input(gen, &cfg);
      const potbo::DiagnosticsBundle b = potbo::run_diagnose(cfg);
      std::printf("wrote %zu mean-excess and %zu stability points to %s\n",
                  b.mean_excess.size(), b.stability.xi.size(), cfg.out_dir.c_str());
      for (const auto& s : b.linearity) {
        std::printf("linearity %-12s slope=%.4g r2=%.4g over [%.4g, %.4g]\n", s.series.c_str(),
                    s.slope, s.r2, s.u_lo, s.u_hi);
      }
      if (!b.stability.skipped.empty()) {
        std::printf("%zu thresholds skipped (see index.json)\n", b.stability.skipped.size());
      }
      return 0;
    }
    if (app.got_subcommand(select)) {
      parse_range(range_text, &cfg);
      finalize_input(gen, &cfg);
      const potbo::FitReport r = potbo::run_select(cfg);
      print_report_summary(r);
      return 0;
    }
    if (app.got_subcommand(fit)) {
      cfg.has_threshold = true;
      finalize_input(gen, &cfg);
      const potbo::FitReport r = potbo::run_fit(cfg);
      print_report_summary(r);
      return 0;
    }
  } catch (const potbo::SelectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& entry : e.trace().evaluations) {
      std::cerr << "  tried u=" << entry.threshold
                << (entry.ok() ? " (ok)" : " failed: " + entry.error) << "\n";
    }
    return 3;
  } catch (const potbo::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const potbo::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const potbo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
