#include "ctcsim/ctc.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "ctcsim/errors.hpp"
#include "ctcsim/numeric.hpp"

namespace ctcsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double lo, double hi, int count) {
  if (count == 1 || lo == hi) {
    return {lo};
  }
  std::vector<double> values(static_cast<std::size_t>(count));
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    values[static_cast<std::size_t>(i)] = lo + i * step;
  }
  values.back() = hi;
  return values;
}

// Shared per-point kernel. Kept out of line so the serial and OpenMP drivers
// evaluate the exact same code and produce bit-identical rows.
[[gnu::noinline]] RegionScanRow region_scan_row(double c_z_rest, double beta,
                                                const ScanGrid& grid) {
  RegionScanRow row{c_z_rest, beta, kNaN, RegionLabel::Invalid};
  if (!(c_z_rest >= 1.0) || !(beta > 0.0) || !(beta < 1.0)) {
    return row;
  }
  const double f1 = c_z_rest * c_z_rest;
  const double f2 = grid.fixed_return_f.value_or(f1);
  const double sqrt_f2 = std::sqrt(f2);
  const double sb = sqrt_f2 * beta;
  if (std::fabs(sb - 1.0) <= grid.singular_tol) {
    row.region = RegionLabel::Singular;
    return row;
  }
  row.c_z_beta = (sqrt_f2 - beta) / (1.0 - sb);
  if (beta > ctc_threshold_beta_general(f1, f2)) {
    row.region = RegionLabel::Ctc;
  } else if (sb > 1.0) {
    row.region = RegionLabel::NegativeLeg;
  } else {
    row.region = RegionLabel::PositiveTime;
  }
  return row;
}

}  // namespace

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::PositiveTime: return "POSITIVE_TIME";
    case RegionLabel::NegativeLeg: return "NEGATIVE_LEG";
    case RegionLabel::Ctc: return "CTC";
    case RegionLabel::Singular: return "SINGULAR";
    case RegionLabel::Invalid: return "INVALID";
  }
  return "INVALID";
}

void ScanGrid::validate() const {
  if (speed_count < 1 || beta_count < 1) {
    throw std::domain_error("ScanGrid: counts must be >= 1");
  }
  if (!(speed_min >= 1.0) || !(speed_max >= speed_min)) {
    throw std::domain_error("ScanGrid: speed range must satisfy 1 <= min <= max");
  }
  if (!(beta_min > 0.0) || !(beta_max >= beta_min) || !(beta_max < 1.0)) {
    throw std::domain_error("ScanGrid: beta range must lie inside (0, 1)");
  }
  if (!(singular_tol > 0.0)) {
    throw std::domain_error("ScanGrid: singular tolerance must be positive");
  }
  if (fixed_return_f && !(*fixed_return_f >= 1.0)) {
    throw std::domain_error("ScanGrid: fixed return F must be >= 1");
  }
}

std::vector<double> ScanGrid::speed_values() const {
  return linspace(speed_min, speed_max, speed_count);
}

std::vector<double> ScanGrid::beta_values() const {
  return linspace(beta_min, beta_max, beta_count);
}

void PulseScanConfig::validate() const {
  if (!(beta >= 0.0) || !(beta < 1.0)) {
    throw std::domain_error("PulseScanConfig: beta must lie in [0, 1)");
  }
  if (f_count < 1) {
    throw std::domain_error("PulseScanConfig: count must be >= 1");
  }
  if (!(f_min >= 1.0) || !(f_max >= f_min)) {
    throw std::domain_error("PulseScanConfig: F range must satisfy 1 <= min <= max");
  }
  if (!(singular_tol > 0.0)) {
    throw std::domain_error("PulseScanConfig: singular tolerance must be positive");
  }
}

std::vector<double> PulseScanConfig::f_values() const {
  return linspace(f_min, f_max, f_count);
}

double ctc_threshold_beta(double F) {
  if (!(F >= 1.0)) {
    throw std::domain_error("ctc_threshold_beta: F must be >= 1");
  }
  return 2.0 * std::sqrt(F) / (F + 1.0);
}

double ctc_threshold_beta_general(double F1, double F2) {
  if (!(F1 >= 1.0) || !(F2 >= 1.0)) {
    throw std::domain_error("ctc_threshold_beta_general: F1, F2 must be >= 1");
  }
  const double s1 = std::sqrt(F1);
  const double s2 = std::sqrt(F2);
  return (s1 + s2) / (1.0 + s1 * s2);
}

double round_trip_time(double L, double F1, double F2, const BoostParameter& boost,
                       double c_v) {
  if (!(L > 0.0)) {
    throw std::domain_error("round_trip_time: L must be positive");
  }
  const double outbound = L / axial_light_speed(F1, c_v);
  const double back = L / null_speed_backward(F2, boost, c_v);
  return outbound + back;
}

RegionLabel classify_point(double c_z_rest, double beta, double singular_tol) {
  if (!(c_z_rest >= 1.0)) {
    return RegionLabel::Invalid;
  }
  const double f = c_z_rest * c_z_rest;
  return classify_point_general(f, f, beta, singular_tol);
}

RegionLabel classify_point_general(double F1, double F2, double beta, double singular_tol) {
  if (!(F1 >= 1.0) || !(F2 >= 1.0) || !(beta > 0.0) || !(beta < 1.0)) {
    return RegionLabel::Invalid;
  }
  const double sb = std::sqrt(F2) * beta;
  if (std::fabs(sb - 1.0) <= singular_tol) {
    return RegionLabel::Singular;
  }
  if (beta > ctc_threshold_beta_general(F1, F2)) {
    return RegionLabel::Ctc;
  }
  if (sb > 1.0) {
    return RegionLabel::NegativeLeg;
  }
  return RegionLabel::PositiveTime;
}

double symmetric_beta(double F1, double F2) {
  const double beta = ctc_threshold_beta_general(F1, F2);
  if (!(beta < 1.0)) {
    throw std::domain_error("symmetric_beta: no subluminal boost (flat wire)");
  }
  return beta;
}

std::vector<RegionScanRow> region_scan(const ScanGrid& grid) {
  grid.validate();
  const auto speeds = grid.speed_values();
  const auto betas = grid.beta_values();
  const std::int64_t nx = static_cast<std::int64_t>(speeds.size());
  const std::int64_t total = nx * static_cast<std::int64_t>(betas.size());
  std::vector<RegionScanRow> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    rows[static_cast<std::size_t>(i)] =
        region_scan_row(speeds[static_cast<std::size_t>(i % nx)],
                        betas[static_cast<std::size_t>(i / nx)], grid);
  }
  return rows;
}

std::vector<RegionScanRow> region_scan_serial(const ScanGrid& grid) {
  grid.validate();
  const auto speeds = grid.speed_values();
  const auto betas = grid.beta_values();
  std::vector<RegionScanRow> rows;
  rows.reserve(speeds.size() * betas.size());
  for (const double beta : betas) {
    for (const double speed : speeds) {
      rows.push_back(region_scan_row(speed, beta, grid));
    }
  }
  return rows;
}

std::vector<PulseScanRow> pulse_scan(const PulseScanConfig& cfg) {
  cfg.validate();
  const auto fs = cfg.f_values();
  const double b = cfg.beta;
  const double step =
      fs.size() > 1 ? (cfg.f_max - cfg.f_min) / static_cast<double>(fs.size() - 1) : 0.0;
  const double f_horizon =
      b > 0.0 ? 1.0 / (b * b) : std::numeric_limits<double>::infinity();
  std::vector<PulseScanRow> rows;
  rows.reserve(fs.size());
  for (const double f : fs) {
    const bool near_locus = std::isfinite(f_horizon) && std::fabs(f - f_horizon) <= step / 2.0;
    const double sb = std::sqrt(f) * b;
    if (std::fabs(sb - 1.0) <= cfg.singular_tol) {
      rows.push_back(PulseScanRow{f, kNaN, kNaN, kNaN, true});
      continue;
    }
    const double den = 1.0 - f * b * b;
    const double c_p = std::sqrt(f) * (1.0 - b * b) / den;
    const double v = b * (f - 1.0) / den;
    rows.push_back(PulseScanRow{f, c_p, v, std::fabs(c_p), near_locus});
  }
  return rows;
}

}  // namespace ctcsim
