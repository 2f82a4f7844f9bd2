#ifndef CTCSIM_CTC_HPP
#define CTCSIM_CTC_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "ctcsim/kinematics.hpp"

namespace ctcsim {

/// Classification of a (speed, boost) parameter point.
enum class RegionLabel {
  PositiveTime,  // round trip takes positive time
  NegativeLeg,   // return leg runs in negative time but the total stays >= 0
  Ctc,           // total round-trip time < 0
  Singular,      // sqrt(F) beta = 1 within tolerance
  Invalid,       // inputs out of domain
};

std::string_view to_string(RegionLabel label);

/// Rectangular grid over (c_z_rest, beta). Speeds are expressed in units of
/// c_v. A degenerate range (min == max) collapses that axis to one sample.
struct ScanGrid {
  double speed_min = 1.0;
  double speed_max = 2.5;
  int speed_count = 200;
  double beta_min = 0.01;
  double beta_max = 0.99;
  int beta_count = 200;
  // When set, the return wire keeps this F while the grid speed parametrizes
  // the rest wire only (general two-wire scan).
  std::optional<double> fixed_return_f;
  double singular_tol = 1e-9;

  void validate() const;  // throws std::domain_error on bad ranges
  std::vector<double> speed_values() const;
  std::vector<double> beta_values() const;
};

/// One row of the region scan. c_z_beta is the signed return-leg speed in
/// units of c_v; NaN on SINGULAR and INVALID rows.
struct RegionScanRow {
  double c_z_rest;
  double beta;
  double c_z_beta;
  RegionLabel region;
};

/// 1D sweep over F at a fixed boost, reporting pulse-form parameters.
struct PulseScanConfig {
  double beta = 0.6;
  double f_min = 1.0;
  double f_max = 6.4;
  int f_count = 541;
  double singular_tol = 1e-9;

  void validate() const;
  std::vector<double> f_values() const;
};

/// One row of the pulse sweep, speeds in units of c_v. Rows on the pole
/// F beta^2 = 1 carry NaN values with the horizon flag set; otherwise the
/// flag marks the grid row(s) nearest the horizon locus F = 1/beta^2.
struct PulseScanRow {
  double f;
  double c_p;
  double v_pulse;
  double abs_c_p;
  bool horizon;
};

/// Minimum boost for a negative round trip with equal wires:
/// 2 sqrt(F) / (F + 1). Equals 1 at F = 1 (unreachable) and decreases
/// strictly for F > 1.
double ctc_threshold_beta(double F);

/// General two-wire form: (sqrt(F1) + sqrt(F2)) / (1 + sqrt(F1) sqrt(F2)).
/// Reduces to ctc_threshold_beta(F) when F1 = F2 = F.
double ctc_threshold_beta_general(double F1, double F2);

/// Signed total time of the loop: L at speed c_v sqrt(F1) out, L back on the
/// boosted wire at the signed return speed. Negative total time marks a
/// closed timelike loop. Throws SingularityError at sqrt(F2) beta = 1.
double round_trip_time(double L, double F1, double F2, const BoostParameter& boost,
                       double c_v = 1.0);

/// Classify a grid point with both wires at F = c_z_rest^2. Out-of-domain
/// inputs yield Invalid rather than an exception.
RegionLabel classify_point(double c_z_rest, double beta, double singular_tol = 1e-9);

/// Two-wire generalization used by reports and the fixed-F2 scan.
RegionLabel classify_point_general(double F1, double F2, double beta,
                                   double singular_tol = 1e-9);

/// Boost at which the outbound and return speeds have equal magnitude and
/// opposite sign: (sqrt(F1) + sqrt(F2)) / (1 + sqrt(F1) sqrt(F2)). This is
/// exactly the zero-total-time boundary. Throws std::domain_error when the
/// result is not subluminal (either wire flat).
double symmetric_beta(double F1, double F2);

/// Region scan over the grid, rows in beta-major order (beta varies slowest).
/// Evaluates grid points in parallel when OpenMP is enabled; the row order
/// and every value are independent of the execution schedule.
std::vector<RegionScanRow> region_scan(const ScanGrid& grid);

/// Serial reference implementation; produces bit-identical rows.
std::vector<RegionScanRow> region_scan_serial(const ScanGrid& grid);

/// F sweep at fixed boost (serial; the sweep is small).
std::vector<PulseScanRow> pulse_scan(const PulseScanConfig& cfg);

}  // namespace ctcsim

#endif  // CTCSIM_CTC_HPP
