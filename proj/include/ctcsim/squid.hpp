#ifndef CTCSIM_SQUID_HPP
#define CTCSIM_SQUID_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctcsim/metric.hpp"

namespace ctcsim {

/// Transmission-line constants for a SQUID array. All fluxes in this module
/// are fractions of the flux quantum; the hard wall sits at |fraction| = 1/2
/// where the junction inductance diverges, while flux_ceiling is the
/// configurable operating limit below it.
struct SquidArrayParams {
  double c0 = 1.0;                // line speed at zero external flux
  double critical_current = 1.0;  // I_c, used in inductance reporting only
  double capacitance = 1.0;       // C_s, used in inductance reporting only
  double flux_quantum = 1.0;      // phi_0 normalization
  double flux_ceiling = 0.45;     // max |phi_ext|/phi_0, in (0, 1/2)

  void validate() const;
};

enum class FeasibilityVerdict {
  Feasible,
  ChronologyProtected,  // target needs a negative effective light speed
  OutOfRange,           // target positive but beyond the admissible window
};

std::string_view to_string(FeasibilityVerdict verdict);

struct FeasibilityReport {
  FeasibilityVerdict verdict;
  std::string reason;          // short machine-readable code
  std::string limiting_name;   // name of the binding/violated bound
  double limiting_value;       // its value (NaN when not applicable)
  std::optional<double> ac_fraction;     // synthesized AC flux fraction
  std::optional<double> total_fraction;  // dc + ac
  std::string advisory;        // free-form remark, may be empty
};

struct FluxSample {
  double r;
  double t;
  double ac_fraction;
};

/// Flux drive split into a DC bias plus an AC profile over (r, t), all as
/// fractions of the flux quantum. Construction rejects any sample whose total
/// |dc + ac| exceeds the ceiling.
struct FluxProfile {
  double dc;
  std::vector<FluxSample> samples;

  FluxProfile(double dc, std::vector<FluxSample> samples, double flux_ceiling = 0.45);
};

/// Weak-signal SQUID inductance phi_0 / (4 pi I_c cos(pi phi_fraction)).
/// Diverges toward |phi_fraction| = 1/2; that point and beyond are rejected.
double squid_inductance(double phi_fraction, double critical_current, double flux_quantum);

/// c0 = 1 / sqrt(L_s(0) C_s) expressed through the circuit constants.
double zero_flux_line_speed(double critical_current, double capacitance, double flux_quantum);

/// Line speed under external flux: c0 sqrt(cos(pi phi_fraction)). The square
/// is a cosine and is therefore never negative: no flux value yields an
/// imaginary (negative-squared) speed. Throws FluxRangeError beyond the
/// ceiling.
double line_speed(double phi_fraction, const SquidArrayParams& params);

struct SpeedDecomposition {
  double c_dc;     // c0 sqrt(cos(pi dc))
  double c_tilde;  // sqrt(sec(pi dc) cos(pi total)); c_dc * c_tilde = line speed
};

/// Split the flux-dependent speed into its DC part and the dimensionless AC
/// factor. Both fractions must keep their phase in [-pi/2, pi/2].
SpeedDecomposition speed_decomposition(double dc, double total, const SquidArrayParams& params);

/// AC flux fraction that realizes the factor F on top of a DC bias:
/// arccos(F cos(pi dc)) / pi - dc. Throws FluxRangeError when F cos(pi dc)
/// leaves the arccos domain or when the synthesized total exceeds the
/// ceiling. F_target <= 0 is a domain error here; negative targets are the
/// feasibility checker's business.
double synthesize_flux_for_F(double F_target, double dc, const SquidArrayParams& params);

/// Largest achievable c_z / c_v at the given DC bias: sqrt(sec(pi dc)),
/// attained when the AC flux cancels the bias entirely.
double max_speed_ratio(double dc, const SquidArrayParams& params);

/// Verdict on a requested effective speed (in units of c_v). Negative targets
/// are unreachable for any flux: the dispersion is a cosine, so c^2 >= 0
/// always; those come back ChronologyProtected. Positive targets are
/// OutOfRange beyond max_speed_ratio(dc); otherwise Feasible with the
/// synthesized fluxes attached. A feasible synthesis whose total exceeds the
/// configured ceiling (slow targets at high bias) is reported with the excess
/// in limiting_name/advisory rather than rejected, since only the hard wall
/// at half a flux quantum is fundamental.
FeasibilityReport feasibility_report(double target_speed, double dc,
                                     const SquidArrayParams& params);

/// Same verdict keyed on the factor F = (target/c_v)^2; F < 0 encodes a
/// negative squared speed and is ChronologyProtected.
FeasibilityReport feasibility_report_for_f(double F_target, double dc,
                                           const SquidArrayParams& params);

/// Verdict on generating a magnetic-flux bias pulse of the given velocity in
/// an auxiliary line: the pulse must run forward and is capped by the
/// propagation speed of the unbiased array, 0 <= v_pulse <= c0.
FeasibilityReport pulse_feasibility_report(double v_pulse, const SquidArrayParams& params);

/// Static flux profile emulating a wire at rest: one sample per radius, at
/// t = 0, with the AC fraction synthesized from F(r). Throws FluxRangeError
/// if any radius needs a flux beyond the ceiling.
FluxProfile wire_flux_profile(const WireProfile& wire, const std::vector<double>& radii,
                              double dc, const SquidArrayParams& params);

}  // namespace ctcsim

#endif  // CTCSIM_SQUID_HPP
