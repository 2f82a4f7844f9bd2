#include "ctcsim/kinematics.hpp"

#include <cmath>
#include <stdexcept>

#include "ctcsim/errors.hpp"
#include "ctcsim/numeric.hpp"

namespace ctcsim {

namespace {

void require_factor(double F) {
  if (!(F >= 1.0)) {
    throw std::domain_error("kinematics: F must be >= 1");
  }
}

void require_speed(double c_v) {
  if (!(c_v > 0.0)) {
    throw std::domain_error("kinematics: c_v must be positive");
  }
}

}  // namespace

BoostParameter::BoostParameter(double beta) : beta_(beta) {
  if (!(std::fabs(beta) < 1.0)) {
    throw std::domain_error("BoostParameter: |beta| must be < 1");
  }
}

double BoostParameter::gamma() const {
  return 1.0 / std::sqrt((1.0 - beta_) * (1.0 + beta_));
}

double PulseFrameParams::abs_c_p() const { return std::fabs(c_p); }

Coordinates lorentz_transform(const Coordinates& event, const BoostParameter& boost,
                              double c_v) {
  require_speed(c_v);
  const double g = boost.gamma();
  const double b = boost.beta();
  return Coordinates{g * (event.t - b * event.z / c_v), g * (event.z - b * c_v * event.t)};
}

MetricCoefficients boosted_metric(double F, const BoostParameter& boost, double c_v) {
  require_factor(F);
  require_speed(c_v);
  const double b = boost.beta();
  const double g2 = 1.0 / ((1.0 - b) * (1.0 + b));
  return MetricCoefficients{-g2 * c_v * c_v * (F - b * b), g2 * c_v * b * (F - 1.0),
                            g2 * (1.0 - F * b * b)};
}

double null_speed_forward(double F, const BoostParameter& boost, double c_v) {
  require_factor(F);
  require_speed(c_v);
  const double b = boost.beta();
  const double s = std::sqrt(F);
  const double den = 1.0 + s * b;
  if (std::fabs(den) <= kRelTol * (1.0 + std::fabs(s * b))) {
    throw SingularityError("null_speed_forward: pole at sqrt(F) beta = -1");
  }
  return c_v * (b + s) / den;
}

double null_speed_backward(double F, const BoostParameter& boost, double c_v) {
  require_factor(F);
  require_speed(c_v);
  const double b = boost.beta();
  const double s = std::sqrt(F);
  const double den = 1.0 - s * b;
  if (std::fabs(den) <= kRelTol * (1.0 + std::fabs(s * b))) {
    throw SingularityError("null_speed_backward: pole at sqrt(F) beta = 1");
  }
  return c_v * (s - b) / den;
}

bool negative_time_condition(double F, const BoostParameter& boost) {
  require_factor(F);
  return std::sqrt(F) * boost.beta() > 1.0;
}

PulseFrameParams pulse_frame_params(double F, const BoostParameter& boost, double c_v) {
  require_factor(F);
  require_speed(c_v);
  const double b = boost.beta();
  const double fb2 = F * b * b;
  const double den = 1.0 - fb2;
  if (std::fabs(den) <= kRelTol * (1.0 + fb2)) {
    throw SingularityError("pulse_frame_params: coordinate degeneration at F beta^2 = 1");
  }
  const double cp = c_v * std::sqrt(F) * (1.0 - b * b) / den;
  const double v = c_v * b * (F - 1.0) / den;
  return PulseFrameParams{cp, v};
}

MetricCoefficients pulse_metric(const PulseFrameParams& p) {
  return MetricCoefficients{-(p.c_p * p.c_p - p.v_pulse * p.v_pulse), p.v_pulse, 1.0};
}

bool horizon_condition(const PulseFrameParams& p, double rel_tol) {
  const double cp2 = p.c_p * p.c_p;
  const double v2 = p.v_pulse * p.v_pulse;
  return std::fabs(cp2 - v2) <= rel_tol * std::max(cp2, v2);
}

}  // namespace ctcsim
