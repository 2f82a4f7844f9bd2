#include "ctcsim/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "ctcsim/errors.hpp"
#include "ctcsim/metric.hpp"
#include "ctcsim/numeric.hpp"

namespace ctcsim::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ordered_json number_or_null(double x) {
  if (std::isfinite(x)) {
    return ordered_json(x);
  }
  return ordered_json(nullptr);
}

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

SquidArrayParams squid_params(const RunConfig& cfg) {
  SquidArrayParams params;
  params.c0 = cfg.c0;
  params.flux_ceiling = cfg.flux_ceiling;
  return params;
}

ordered_json feasibility_json(const FeasibilityReport& report) {
  ordered_json j;
  j["verdict"] = std::string(to_string(report.verdict));
  j["reason"] = report.reason;
  if (!report.limiting_name.empty()) {
    j["limiting"] = {{"name", report.limiting_name},
                     {"value", number_or_null(report.limiting_value)}};
  } else {
    j["limiting"] = nullptr;
  }
  j["ac_fraction"] = report.ac_fraction ? ordered_json(*report.ac_fraction)
                                        : ordered_json(nullptr);
  j["total_fraction"] = report.total_fraction ? ordered_json(*report.total_fraction)
                                              : ordered_json(nullptr);
  j["advisory"] = report.advisory.empty() ? ordered_json(nullptr)
                                          : ordered_json(report.advisory);
  return j;
}

int usage_error(std::ostream& err, const char* command, const std::string& message) {
  err << command << ": " << message << "\n";
  return kExitUsage;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int cmd_scan_fig2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.grid.validate();
  } catch (const std::exception& e) {
    return usage_error(err, "scan-fig2", e.what());
  }
  const auto rows = region_scan(cfg.grid);
  if (cfg.format.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
    out << "c_z_rest,beta,c_z_beta,region\n";
    for (const auto& row : rows) {
      out << format_number(row.c_z_rest) << ',' << format_number(row.beta) << ','
          << format_number(row.c_z_beta) << ',' << to_string(row.region) << '\n';
    }
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      j.push_back({{"c_z_rest", row.c_z_rest},
                   {"beta", row.beta},
                   {"c_z_beta", number_or_null(row.c_z_beta)},
                   {"region", std::string(to_string(row.region))}});
    }
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_pulse_fig3(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.pulse.validate();
  } catch (const std::exception& e) {
    return usage_error(err, "pulse-fig3", e.what());
  }
  const auto rows = pulse_scan(cfg.pulse);
  if (cfg.format.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
    out << "F,c_p,v_pulse,abs_c_p,horizon\n";
    for (const auto& row : rows) {
      out << format_number(row.f) << ',' << format_number(row.c_p) << ','
          << format_number(row.v_pulse) << ',' << format_number(row.abs_c_p) << ','
          << (row.horizon ? '1' : '0') << '\n';
    }
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      j.push_back({{"F", row.f},
                   {"c_p", number_or_null(row.c_p)},
                   {"v_pulse", number_or_null(row.v_pulse)},
                   {"abs_c_p", number_or_null(row.abs_c_p)},
                   {"horizon", row.horizon}});
    }
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_flux_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SquidArrayParams params = squid_params(cfg);
  try {
    params.validate();
    if (!(std::fabs(cfg.dc) <= params.flux_ceiling)) {
      throw std::domain_error("dc bias must stay within the flux ceiling");
    }
  } catch (const std::exception& e) {
    return usage_error(err, "flux-profile", e.what());
  }

  const OutputFormat fmt = cfg.format.value_or(OutputFormat::Json);

  if (cfg.wire_radius) {
    std::vector<double> radii;
    WireProfile wire(1.0, 2);
    try {
      wire = WireProfile(*cfg.wire_radius, cfg.wire_exponent);
      if (!(cfg.r_min > 0.0) || !(cfg.r_max >= cfg.r_min) || cfg.r_count < 1) {
        throw std::domain_error("radius range must satisfy 0 < min <= max, count >= 1");
      }
      radii = linspace(cfg.r_min, cfg.r_max, cfg.r_count);
    } catch (const std::exception& e) {
      return usage_error(err, "flux-profile", e.what());
    }
    try {
      const FluxProfile profile = wire_flux_profile(wire, radii, cfg.dc, params);
      if (fmt == OutputFormat::Csv) {
        out << "r,t,phi_total_fraction\n";
        for (const auto& s : profile.samples) {
          out << format_number(s.r) << ',' << format_number(s.t) << ','
              << format_number(profile.dc + s.ac_fraction) << '\n';
        }
      } else {
        ordered_json j;
        j["dc"] = profile.dc;
        ordered_json samples = ordered_json::array();
        for (const auto& s : profile.samples) {
          samples.push_back(
              {{"r", s.r}, {"t", s.t}, {"phi_total_fraction", profile.dc + s.ac_fraction}});
        }
        j["samples"] = std::move(samples);
        out << j.dump(2) << '\n';
      }
      return kExitOk;
    } catch (const FluxRangeError& e) {
      err << "flux-profile: " << e.what() << "\n";
      return kExitInfeasible;
    }
  }

  // Scalar target: one record, written for every verdict.
  const double f_target = cfg.f_target;
  FeasibilityVerdict verdict = FeasibilityVerdict::Feasible;
  std::string reason = "ok";
  double ac = kNaN;
  double total = kNaN;
  if (f_target < 0.0) {
    verdict = FeasibilityVerdict::ChronologyProtected;
    reason = "negative_speed_squared_unreachable";
  } else {
    try {
      ac = synthesize_flux_for_F(f_target, cfg.dc, params);
      total = cfg.dc + ac;
    } catch (const FluxRangeError& e) {
      verdict = FeasibilityVerdict::OutOfRange;
      reason = e.what();
    } catch (const std::exception& e) {
      return usage_error(err, "flux-profile", e.what());
    }
  }
  const double c_ratio = f_target >= 0.0 ? std::sqrt(f_target) : kNaN;

  if (fmt == OutputFormat::Csv) {
    out << "F_target,dc,ac,total,c_ratio,verdict,reason\n";
    out << format_number(f_target) << ',' << format_number(cfg.dc) << ','
        << format_number(ac) << ',' << format_number(total) << ','
        << format_number(c_ratio) << ',' << to_string(verdict) << ',' << reason << '\n';
  } else {
    ordered_json j;
    j["F_target"] = f_target;
    j["dc"] = cfg.dc;
    j["ac"] = number_or_null(ac);
    j["total"] = number_or_null(total);
    j["c_ratio"] = number_or_null(c_ratio);
    j["verdict"] = std::string(to_string(verdict));
    j["reason"] = reason;
    out << j.dump(2) << '\n';
  }
  return verdict == FeasibilityVerdict::Feasible ? kExitOk : kExitInfeasible;
}

int cmd_ctc_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format && *cfg.format == OutputFormat::Csv) {
    return usage_error(err, "ctc-check", "emits JSON reports only");
  }
  SquidArrayParams params = squid_params(cfg);
  try {
    params.validate();
    if (!(cfg.f1 >= 1.0) || !(cfg.f2 >= 1.0)) {
      throw std::domain_error("F1 and F2 must be >= 1");
    }
    if (!(cfg.beta > 0.0) || !(cfg.beta < 1.0)) {
      throw std::domain_error("beta must lie in (0, 1)");
    }
    if (!(cfg.length > 0.0) || !(cfg.c_v > 0.0)) {
      throw std::domain_error("L and c_v must be positive");
    }
    if (!(std::fabs(cfg.dc) <= params.flux_ceiling)) {
      throw std::domain_error("dc bias must stay within the flux ceiling");
    }
  } catch (const std::exception& e) {
    return usage_error(err, "ctc-check", e.what());
  }

  const BoostParameter boost(cfg.beta);
  const RegionLabel region = classify_point_general(cfg.f1, cfg.f2, cfg.beta);
  double return_speed = kNaN;  // units of c_v
  double trip_time = kNaN;
  if (region != RegionLabel::Singular) {
    return_speed = null_speed_backward(cfg.f2, boost, cfg.c_v) / cfg.c_v;
    trip_time = round_trip_time(cfg.length, cfg.f1, cfg.f2, boost, cfg.c_v);
  }

  ordered_json j;
  j["inputs"] = {{"F1", cfg.f1},          {"F2", cfg.f2},
                 {"beta", cfg.beta},      {"L", cfg.length},
                 {"c_v", cfg.c_v},        {"dc", cfg.dc},
                 {"flux_ceiling", cfg.flux_ceiling}};
  j["thresholds"] = {{"ctc_beta", ctc_threshold_beta_general(cfg.f1, cfg.f2)},
                     {"negative_leg_beta", 1.0 / std::sqrt(cfg.f2)}};
  j["region"] = std::string(to_string(region));
  j["round_trip_time"] = number_or_null(trip_time);
  j["return_leg_speed"] = number_or_null(return_speed);
  if (region == RegionLabel::Singular) {
    j["feasibility"] = nullptr;
    j["pulse"] = nullptr;
  } else {
    j["feasibility"] = feasibility_json(feasibility_report(return_speed, cfg.dc, params));
    // the same point driven as a moving bias pulse in an auxiliary line
    const PulseFrameParams p = pulse_frame_params(cfg.f2, boost, cfg.c_v);
    ordered_json pulse;
    pulse["c_p"] = p.c_p / cfg.c_v;
    pulse["v_pulse"] = p.v_pulse / cfg.c_v;
    pulse["abs_c_p"] = p.abs_c_p() / cfg.c_v;
    pulse["horizon"] = horizon_condition(p);
    pulse["feasibility"] =
        feasibility_json(pulse_feasibility_report(p.v_pulse / cfg.c_v, params));
    j["pulse"] = std::move(pulse);
  }
  if (region == RegionLabel::Ctc) {
    const SurfaceAssembly assembly =
        design_ctc_assembly(cfg.f1, cfg.f2, cfg.beta, AssemblyMode::AsGiven, 1.0);
    j["classical_assembly"] = {{"theta1_deg", deg_from_rad(assembly.theta1)},
                               {"theta2_deg", deg_from_rad(assembly.theta2)},
                               {"v1", assembly.v1},
                               {"v2", assembly.v2},
                               {"beta", assembly.beta}};
  } else {
    j["classical_assembly"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_optics_design(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!(cfg.f1 >= 1.0) || !(cfg.f2 >= 1.0)) {
      throw std::domain_error("F1 and F2 must be >= 1");
    }
    if (cfg.n_samples < 2) {
      throw std::domain_error("n-samples must be >= 2");
    }
    if (cfg.mode == AssemblyMode::AsGiven && (!(cfg.beta > 0.0) || !(cfg.beta < 1.0))) {
      throw std::domain_error("as-given mode needs beta in (0, 1)");
    }
  } catch (const std::exception& e) {
    return usage_error(err, "optics-design", e.what());
  }

  SurfaceAssembly assembly{0, 0, 0, 0, 0, 0, 0, cfg.mode};
  try {
    assembly = design_ctc_assembly(cfg.f1, cfg.f2, cfg.beta, cfg.mode, 1.0);
  } catch (const CtcConditionError& e) {
    err << "optics-design: " << e.what() << "\n";
    return kExitNoCtc;
  } catch (const std::exception& e) {
    return usage_error(err, "optics-design", e.what());
  }
  const ScatterTimeline timeline = simulate_wavefront(assembly, cfg.n_samples);

  if (cfg.format.value_or(OutputFormat::Json) == OutputFormat::Csv) {
    out << "# mode=" << to_string(assembly.mode) << '\n';
    out << "# F1=" << format_number(assembly.f1) << " F2=" << format_number(assembly.f2)
        << " beta=" << format_number(assembly.beta) << '\n';
    out << "# theta1_deg=" << format_number(deg_from_rad(assembly.theta1))
        << " theta2_deg=" << format_number(deg_from_rad(assembly.theta2)) << '\n';
    out << "# v1=" << format_number(assembly.v1) << " v2=" << format_number(assembly.v2)
        << '\n';
    out << "# annihilation_time=" << format_number(timeline.annihilation_time)
        << " annihilation_x=" << format_number(timeline.annihilation_x)
        << " meets_junction=" << (timeline.meets_junction ? 1 : 0) << '\n';
    out << "time,x,image_id,kind\n";
    for (const auto& e : timeline.events) {
      out << format_number(e.time) << ',' << format_number(e.x) << ',' << to_string(e.image)
          << ',' << to_string(e.kind) << '\n';
    }
  } else {
    ordered_json j;
    j["assembly"] = {{"mode", std::string(to_string(assembly.mode))},
                     {"F1", assembly.f1},
                     {"F2", assembly.f2},
                     {"beta", assembly.beta},
                     {"theta1_deg", deg_from_rad(assembly.theta1)},
                     {"theta2_deg", deg_from_rad(assembly.theta2)},
                     {"v1", assembly.v1},
                     {"v2", assembly.v2},
                     {"surface1_x", {0.0, SurfaceAssembly::kJunctionX}},
                     {"surface2_x", {SurfaceAssembly::kJunctionX, 1.0}}};
    ordered_json events = ordered_json::array();
    for (const auto& e : timeline.events) {
      events.push_back({{"time", e.time},
                        {"x", e.x},
                        {"image", std::string(to_string(e.image))},
                        {"kind", std::string(to_string(e.kind))}});
    }
    j["timeline"] = {{"annihilation_time", timeline.annihilation_time},
                     {"annihilation_x", timeline.annihilation_x},
                     {"meets_junction", timeline.meets_junction},
                     {"events", std::move(events)}};
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace ctcsim::cli
