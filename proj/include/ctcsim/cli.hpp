#ifndef CTCSIM_CLI_HPP
#define CTCSIM_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "ctcsim/ctc.hpp"
#include "ctcsim/optics.hpp"
#include "ctcsim/squid.hpp"

namespace ctcsim::cli {

enum class OutputFormat { Csv, Json };

/// Fully resolved configuration of one subcommand run. Identical configs
/// produce byte-identical output.
struct RunConfig {
  double c_v = 1.0;
  double c0 = 1.0;
  double flux_ceiling = 0.45;
  // Per-command default applies when unset: CSV for scan tables, JSON for
  // structured reports.
  std::optional<OutputFormat> format;

  ScanGrid grid;          // scan-fig2
  PulseScanConfig pulse;  // pulse-fig3

  // flux-profile
  double f_target = 1.0;
  double dc = 0.45;
  std::optional<double> wire_radius;  // wire-profile mode when set
  int wire_exponent = 2;
  double r_min = 0.2;
  double r_max = 1.2;
  int r_count = 50;

  // ctc-check and optics-design
  double f1 = 1.0;
  double f2 = 1.0;
  double beta = 0.5;
  double length = 1.0;
  AssemblyMode mode = AssemblyMode::Symmetric;
  int n_samples = 9;
};

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;        // input/config validation failure
inline constexpr int kExitInfeasible = 3;   // physically infeasible request
inline constexpr int kExitNoCtc = 4;        // loop condition unmet

/// Region scan table over (c_z_rest, beta).
int cmd_scan_fig2(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Pulse-parameter sweep over F at fixed beta.
int cmd_pulse_fig3(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Flux synthesis for one target F (or a whole wire profile).
int cmd_flux_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full single-point report: thresholds, round-trip time, region label,
/// required return speed, feasibility verdict and, for a closed loop, the
/// classical surface angles.
int cmd_ctc_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Two-surface assembly plus the image timeline.
int cmd_optics_design(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// CSV cell formatting: 12 significant digits.
std::string format_number(double x);

}  // namespace ctcsim::cli

#endif  // CTCSIM_CLI_HPP
