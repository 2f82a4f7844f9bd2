#ifndef CTCSIM_KINEMATICS_HPP
#define CTCSIM_KINEMATICS_HPP

#include "ctcsim/metric.hpp"

namespace ctcsim {

/// Subluminal boost fraction beta = v/c_v, |beta| < 1 strictly.
class BoostParameter {
 public:
  explicit BoostParameter(double beta);

  double beta() const { return beta_; }
  double gamma() const;

 private:
  double beta_;
};

struct Coordinates {
  double t;
  double z;
};

/// Pulse-form parameters: background propagation speed c_p and pulse speed
/// v_pulse. c_p is reported as computed and may be negative; since it enters
/// the pulse metric squared, abs_c_p() is provided for consumers that only
/// need the magnitude.
struct PulseFrameParams {
  double c_p;
  double v_pulse;

  double abs_c_p() const;
};

/// Standard boost of a spacetime event: t' = gamma (t - beta z / c_v),
/// z' = gamma (z - beta c_v t). The inverse is the same map with -beta.
Coordinates lorentz_transform(const Coordinates& event, const BoostParameter& boost,
                              double c_v = 1.0);

/// Metric of a wire of factor F moving at boost beta, as seen from the lab:
/// ds^2 = -gamma^2 F (c_v dt - beta dz)^2 + gamma^2 (dz - beta c_v dt)^2.
MetricCoefficients boosted_metric(double F, const BoostParameter& boost, double c_v = 1.0);

/// dz/dt of the null family co-moving with the boost:
/// c_v (beta + sqrt(F)) / (1 + sqrt(F) beta).
double null_speed_forward(double F, const BoostParameter& boost, double c_v = 1.0);

/// Signed speed of the counter-moving null family,
/// c_v (sqrt(F) - beta) / (1 - sqrt(F) beta). A positive value means the
/// return photon advances in positive coordinate time; a negative value means
/// the leg runs in negative coordinate time. Throws SingularityError on the
/// pole sqrt(F) beta = 1.
double null_speed_backward(double F, const BoostParameter& boost, double c_v = 1.0);

/// True iff sqrt(F) beta > 1: the counter-moving leg runs backwards in
/// coordinate time (necessary but not sufficient for a closed loop).
bool negative_time_condition(double F, const BoostParameter& boost);

/// Reparametrize the boosted metric as a moving-pulse metric:
///   c_p = c_v sqrt(F)(1 - beta^2) / (1 - F beta^2),
///   v   = c_v beta (F - 1) / (1 - F beta^2).
/// Throws SingularityError when F beta^2 = 1 (pulse form degenerates).
PulseFrameParams pulse_frame_params(double F, const BoostParameter& boost, double c_v = 1.0);

/// ds^2 = -(c_p^2 - v^2) dt^2 + 2 v dt dz + dz^2.
MetricCoefficients pulse_metric(const PulseFrameParams& p);

/// True iff c_p^2 = v^2 within the relative tolerance: the locus where the
/// time coefficient of the pulse metric vanishes. For parameters derived from
/// (F, beta) this is exactly the locus sqrt(F) beta = 1.
bool horizon_condition(const PulseFrameParams& p, double rel_tol = 1e-9);

}  // namespace ctcsim

#endif  // CTCSIM_KINEMATICS_HPP
