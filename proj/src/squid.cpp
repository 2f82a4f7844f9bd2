#include "ctcsim/squid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ctcsim/errors.hpp"
#include "ctcsim/numeric.hpp"

namespace ctcsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHardWall = 0.5;  // junction inductance diverges here

void require_dc_admissible(double dc, const SquidArrayParams& params) {
  if (!(std::fabs(dc) <= params.flux_ceiling)) {
    throw FluxRangeError("dc flux bias exceeds the flux ceiling");
  }
}

// F cos(pi dc), clamped onto [0, 1] when rounding pushed it marginally above.
double arccos_argument(double f_target, double dc) {
  double u = f_target * std::cos(kPi * dc);
  if (u > 1.0) {
    if (u <= 1.0 + kRelTol * u) {
      u = 1.0;
    }
  }
  return u;
}

}  // namespace

void SquidArrayParams::validate() const {
  if (!(c0 > 0.0)) {
    throw std::domain_error("SquidArrayParams: c0 must be positive");
  }
  if (!(critical_current > 0.0) || !(capacitance > 0.0) || !(flux_quantum > 0.0)) {
    throw std::domain_error("SquidArrayParams: circuit constants must be positive");
  }
  if (!(flux_ceiling > 0.0) || !(flux_ceiling < kHardWall)) {
    throw std::domain_error("SquidArrayParams: flux ceiling must lie in (0, 1/2)");
  }
}

std::string_view to_string(FeasibilityVerdict verdict) {
  switch (verdict) {
    case FeasibilityVerdict::Feasible: return "FEASIBLE";
    case FeasibilityVerdict::ChronologyProtected: return "CHRONOLOGY_PROTECTED";
    case FeasibilityVerdict::OutOfRange: return "OUT_OF_RANGE";
  }
  return "OUT_OF_RANGE";
}

FluxProfile::FluxProfile(double dc, std::vector<FluxSample> samples, double flux_ceiling)
    : dc(dc), samples(std::move(samples)) {
  if (!(flux_ceiling > 0.0) || !(flux_ceiling < kHardWall)) {
    throw std::domain_error("FluxProfile: flux ceiling must lie in (0, 1/2)");
  }
  if (!(std::fabs(dc) <= flux_ceiling)) {
    throw FluxRangeError("FluxProfile: dc bias exceeds the flux ceiling");
  }
  for (const FluxSample& s : this->samples) {
    if (!(std::fabs(dc + s.ac_fraction) <= flux_ceiling + kRelTol)) {
      throw FluxRangeError("FluxProfile: total flux exceeds the ceiling at a sample");
    }
  }
}

double squid_inductance(double phi_fraction, double critical_current, double flux_quantum) {
  if (!(critical_current > 0.0) || !(flux_quantum > 0.0)) {
    throw std::domain_error("squid_inductance: circuit constants must be positive");
  }
  if (!(std::fabs(phi_fraction) < kHardWall)) {
    throw FluxRangeError("squid_inductance: diverges at half a flux quantum");
  }
  return flux_quantum / (4.0 * kPi * critical_current * std::cos(kPi * phi_fraction));
}

double zero_flux_line_speed(double critical_current, double capacitance, double flux_quantum) {
  if (!(capacitance > 0.0)) {
    throw std::domain_error("zero_flux_line_speed: capacitance must be positive");
  }
  return 1.0 / std::sqrt(squid_inductance(0.0, critical_current, flux_quantum) * capacitance);
}

double line_speed(double phi_fraction, const SquidArrayParams& params) {
  params.validate();
  if (!(std::fabs(phi_fraction) <= params.flux_ceiling)) {
    throw FluxRangeError("line_speed: flux beyond the ceiling");
  }
  return params.c0 * std::sqrt(std::cos(kPi * phi_fraction));
}

SpeedDecomposition speed_decomposition(double dc, double total, const SquidArrayParams& params) {
  params.validate();
  if (!(std::fabs(dc) < kHardWall)) {
    throw std::domain_error("speed_decomposition: dc phase must stay inside (-pi/2, pi/2)");
  }
  if (!(std::fabs(total) <= kHardWall)) {
    throw std::domain_error("speed_decomposition: total phase must stay in [-pi/2, pi/2]");
  }
  const double cos_dc = std::cos(kPi * dc);
  const double c_dc = params.c0 * std::sqrt(cos_dc);
  const double c_tilde = std::sqrt(std::cos(kPi * total) / cos_dc);
  return SpeedDecomposition{c_dc, c_tilde};
}

double synthesize_flux_for_F(double F_target, double dc, const SquidArrayParams& params) {
  params.validate();
  require_dc_admissible(dc, params);
  if (!(F_target > 0.0)) {
    throw std::domain_error("synthesize_flux_for_F: F_target must be positive");
  }
  const double u = arccos_argument(F_target, dc);
  if (u > 1.0) {
    throw FluxRangeError("synthesize_flux_for_F: target above the max speed ratio");
  }
  const double total = std::acos(u) / kPi;
  if (total > params.flux_ceiling + kRelTol) {
    throw FluxRangeError("synthesize_flux_for_F: synthesized total flux exceeds the ceiling");
  }
  return total - dc;
}

double max_speed_ratio(double dc, const SquidArrayParams& params) {
  params.validate();
  require_dc_admissible(dc, params);
  return std::sqrt(1.0 / std::cos(kPi * dc));
}

FeasibilityReport feasibility_report(double target_speed, double dc,
                                     const SquidArrayParams& params) {
  if (target_speed < 0.0) {
    params.validate();
    FeasibilityReport report{FeasibilityVerdict::ChronologyProtected,
                             "negative_effective_speed_unreachable",
                             "line_speed_squared_minimum",
                             0.0,
                             std::nullopt,
                             std::nullopt,
                             ""};
    report.advisory =
        "the cosine dispersion keeps c^2 >= 0 for every flux; the pulse-frame "
        "magnitude |c_p| can stand in for a negative background speed, but the "
        "required pulse velocity is itself negative";
    return report;
  }
  return feasibility_report_for_f(target_speed * target_speed, dc, params);
}

FeasibilityReport feasibility_report_for_f(double F_target, double dc,
                                           const SquidArrayParams& params) {
  params.validate();
  FeasibilityReport report{FeasibilityVerdict::OutOfRange, "", "", kNaN,
                           std::nullopt, std::nullopt, ""};
  if (F_target < 0.0) {
    report.verdict = FeasibilityVerdict::ChronologyProtected;
    report.reason = "negative_speed_squared_unreachable";
    report.limiting_name = "line_speed_squared_minimum";
    report.limiting_value = 0.0;
    return report;
  }
  if (!(std::fabs(dc) < kHardWall)) {
    report.reason = "dc_at_half_flux_quantum";
    report.limiting_name = "dc_fraction";
    report.limiting_value = dc;
    return report;
  }
  if (std::fabs(dc) > params.flux_ceiling) {
    report.reason = "dc_exceeds_flux_ceiling";
    report.limiting_name = "flux_ceiling";
    report.limiting_value = params.flux_ceiling;
    return report;
  }
  const double max_ratio = std::sqrt(1.0 / std::cos(kPi * dc));
  const double u = arccos_argument(F_target, dc);
  if (u > 1.0) {
    report.reason = "target_exceeds_max_speed_ratio";
    report.limiting_name = "max_speed_ratio";
    report.limiting_value = max_ratio;
    return report;
  }
  const double total = std::acos(u) / kPi;
  if (!(total < kHardWall)) {
    // Only reachable for F_target = 0: the flux would sit on the hard wall.
    report.reason = "flux_at_half_quantum";
    report.limiting_name = "total_flux_fraction";
    report.limiting_value = total;
    return report;
  }
  report.verdict = FeasibilityVerdict::Feasible;
  report.reason = "ok";
  report.ac_fraction = total - dc;
  report.total_fraction = total;
  if (total > params.flux_ceiling + kRelTol) {
    report.limiting_name = "total_flux_fraction_above_ceiling";
    report.limiting_value = total;
    report.advisory =
        "synthesized total flux exceeds the configured ceiling; realizing this "
        "slow target means operating the array closer to half a flux quantum";
  }
  return report;
}

FeasibilityReport pulse_feasibility_report(double v_pulse, const SquidArrayParams& params) {
  params.validate();
  FeasibilityReport report{FeasibilityVerdict::Feasible, "ok", "", kNaN,
                           std::nullopt, std::nullopt, ""};
  if (v_pulse < 0.0) {
    report.verdict = FeasibilityVerdict::ChronologyProtected;
    report.reason = "negative_pulse_velocity_unreachable";
    report.limiting_name = "pulse_velocity_minimum";
    report.limiting_value = 0.0;
    report.advisory =
        "the background speed enters the pulse metric squared, so its magnitude "
        "can stand in for a negative value, but the bias pulse itself cannot run "
        "backwards";
    return report;
  }
  if (v_pulse > params.c0) {
    report.verdict = FeasibilityVerdict::OutOfRange;
    report.reason = "pulse_faster_than_unbiased_line";
    report.limiting_name = "pulse_velocity_ceiling_c0";
    report.limiting_value = params.c0;
    return report;
  }
  return report;
}

FluxProfile wire_flux_profile(const WireProfile& wire, const std::vector<double>& radii,
                              double dc, const SquidArrayParams& params) {
  std::vector<FluxSample> samples;
  samples.reserve(radii.size());
  for (const double r : radii) {
    const double f = shape_function(wire, r);
    samples.push_back(FluxSample{r, 0.0, synthesize_flux_for_F(f, dc, params)});
  }
  return FluxProfile(dc, std::move(samples), params.flux_ceiling);
}

}  // namespace ctcsim
