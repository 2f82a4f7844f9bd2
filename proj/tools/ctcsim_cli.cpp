// ctcsim: parameter-space analysis of effective-metric wire spacetimes.
// Subcommands emit deterministic CSV/JSON; see README for the output schemas.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ctcsim/cli.hpp"

namespace {

using ctcsim::cli::kExitUsage;
using ctcsim::cli::OutputFormat;
using ctcsim::cli::RunConfig;

bool parse_range(const std::string& text, double& lo, double& hi) {
  const auto pos = text.find(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == text.size()) {
    return false;
  }
  try {
    std::size_t idx = 0;
    const std::string head = text.substr(0, pos);
    lo = std::stod(head, &idx);
    if (idx != head.size()) {
      return false;
    }
    const std::string tail = text.substr(pos + 1);
    hi = std::stod(tail, &idx);
    if (idx != tail.size()) {
      return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ctcsim: effective-metric analysis of superluminal wire spacetimes.\n"
      "Region scans, pulse-frame sweeps, SQUID flux synthesis with feasibility\n"
      "verdicts, and classical scattering-surface loop designs."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path;
  std::string format_str;
  std::string mode_str = "symmetric";
  std::string speed_range = "1:2.5";
  std::string beta_range = "0.01:0.99";
  std::string f_range = "1:6.4";
  std::string r_range = "0.2:1.2";
  double fixed_f2 = 1.0;
  double wire_radius = 1.0;

  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.add_option("--cv", cfg.c_v, "Speed normalization c_v")->capture_default_str();
  app.add_option("--c0", cfg.c0, "Zero-flux transmission-line speed")->capture_default_str();
  app.add_option("--flux-ceiling", cfg.flux_ceiling,
                 "Operating limit on |flux|/flux_quantum, below the hard wall at 0.5")
      ->capture_default_str();
  app.add_option("--format", format_str, "Output format: csv or json (per-command default)");
  app.add_option("--out", out_path, "Write results to this path instead of stdout");

  CLI::App* scan = app.add_subcommand(
      "scan-fig2", "Region scan over (c_z_rest, beta); CSV table by default");
  scan->fallthrough();
  scan->add_option("--speed-range", speed_range, "Rest-wire c_z range min:max, units of c_v")
      ->capture_default_str();
  scan->add_option("--speed-count", cfg.grid.speed_count, "Samples along the speed axis")
      ->capture_default_str();
  scan->add_option("--beta-range", beta_range, "Boost range min:max inside (0,1)")
      ->capture_default_str();
  scan->add_option("--beta-count", cfg.grid.beta_count, "Samples along the beta axis")
      ->capture_default_str();
  CLI::Option* f2_opt = scan->add_option(
      "--f2", fixed_f2, "Hold the return wire at this fixed F (two-wire scan)");
  scan->add_option("--singular-tol", cfg.grid.singular_tol,
                   "Band |sqrt(F) beta - 1| flagged as SINGULAR")
      ->capture_default_str();

  CLI::App* pulse = app.add_subcommand(
      "pulse-fig3", "Pulse-frame sweep over F at fixed beta; CSV table by default");
  pulse->fallthrough();
  pulse->add_option("--beta", cfg.pulse.beta, "Boost in [0, 1)")->required();
  pulse->add_option("--F-range", f_range, "F range min:max, min >= 1")->capture_default_str();
  pulse->add_option("--F-count", cfg.pulse.f_count, "Samples along F")->capture_default_str();

  CLI::App* flux = app.add_subcommand(
      "flux-profile", "Synthesize the AC flux for a target F (or a wire profile)");
  flux->fallthrough();
  flux->add_option("--F", cfg.f_target, "Target shape factor F")->required();
  flux->add_option("--dc", cfg.dc, "DC flux bias as a fraction of the flux quantum")
      ->capture_default_str();
  CLI::Option* wire_opt = flux->add_option(
      "--wire-R", wire_radius, "Emit a per-radius profile for a wire of this radius");
  flux->add_option("--wire-n", cfg.wire_exponent, "Wire shape exponent, integer >= 2")
      ->capture_default_str();
  flux->add_option("--r-range", r_range, "Radius range min:max for the wire profile")
      ->capture_default_str();
  flux->add_option("--r-count", cfg.r_count, "Samples along the radius")
      ->capture_default_str();

  CLI::App* check = app.add_subcommand(
      "ctc-check", "Single-point report: thresholds, region, feasibility (JSON)");
  check->fallthrough();
  check->add_option("--F1", cfg.f1, "Rest-wire F")->required();
  check->add_option("--F2", cfg.f2, "Boosted-wire F")->required();
  check->add_option("--beta", cfg.beta, "Boost in (0, 1)")->required();
  check->add_option("--L", cfg.length, "Axial leg length")->capture_default_str();
  check->add_option("--dc", cfg.dc, "DC flux bias for the feasibility verdict")
      ->capture_default_str();

  CLI::App* optics = app.add_subcommand(
      "optics-design", "Two-surface assembly and image timeline (JSON by default)");
  optics->fallthrough();
  optics->add_option("--F1", cfg.f1, "Rest-wire F")->required();
  optics->add_option("--F2", cfg.f2, "Boosted-wire F")->required();
  optics->add_option("--mode", mode_str, "symmetric or as-given")->capture_default_str();
  optics->add_option("--beta", cfg.beta, "Boost for as-given mode");
  optics->add_option("--n-samples", cfg.n_samples, "Trajectory samples per image")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (format_str == "csv") {
    cfg.format = OutputFormat::Csv;
  } else if (format_str == "json") {
    cfg.format = OutputFormat::Json;
  } else if (!format_str.empty()) {
    std::cerr << "ctcsim: unknown format '" << format_str << "' (use csv or json)\n";
    return kExitUsage;
  }

  if (!parse_range(speed_range, cfg.grid.speed_min, cfg.grid.speed_max) ||
      !parse_range(beta_range, cfg.grid.beta_min, cfg.grid.beta_max) ||
      !parse_range(f_range, cfg.pulse.f_min, cfg.pulse.f_max) ||
      !parse_range(r_range, cfg.r_min, cfg.r_max)) {
    std::cerr << "ctcsim: ranges must be given as min:max\n";
    return kExitUsage;
  }
  if (f2_opt->count() > 0) {
    cfg.grid.fixed_return_f = fixed_f2;
  }
  if (wire_opt->count() > 0) {
    cfg.wire_radius = wire_radius;
  }
  if (mode_str == "symmetric") {
    cfg.mode = ctcsim::AssemblyMode::Symmetric;
  } else if (mode_str == "as-given") {
    cfg.mode = ctcsim::AssemblyMode::AsGiven;
  } else {
    std::cerr << "ctcsim: unknown mode '" << mode_str << "' (use symmetric or as-given)\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "ctcsim: cannot open output path '" << out_path << "'\n";
      return kExitUsage;
    }
    out = &file;
  }

  if (*scan) {
    return ctcsim::cli::cmd_scan_fig2(cfg, *out, std::cerr);
  }
  if (*pulse) {
    return ctcsim::cli::cmd_pulse_fig3(cfg, *out, std::cerr);
  }
  if (*flux) {
    return ctcsim::cli::cmd_flux_profile(cfg, *out, std::cerr);
  }
  if (*check) {
    return ctcsim::cli::cmd_ctc_check(cfg, *out, std::cerr);
  }
  if (*optics) {
    return ctcsim::cli::cmd_optics_design(cfg, *out, std::cerr);
  }
  std::cerr << "ctcsim: no subcommand given\n";
  return kExitUsage;
}
