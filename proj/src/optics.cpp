#include "ctcsim/optics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ctcsim/ctc.hpp"
#include "ctcsim/errors.hpp"
#include "ctcsim/numeric.hpp"

namespace ctcsim {

namespace {

constexpr double kAngleTol = 1e-12;       // rad, pole exclusion at 45 deg
constexpr double kJunctionTol = 1e-9;     // normalized x units

double arccot_nonneg(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("arccot argument must be nonnegative on this branch");
  }
  return kPi / 2.0 - std::atan(x);
}

}  // namespace

std::string_view to_string(AssemblyMode mode) {
  switch (mode) {
    case AssemblyMode::Symmetric: return "symmetric";
    case AssemblyMode::AsGiven: return "as-given";
  }
  return "symmetric";
}

std::string_view to_string(ImageId image) {
  switch (image) {
    case ImageId::Left: return "left";
    case ImageId::Right: return "right";
    case ImageId::Both: return "both";
  }
  return "both";
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Appear: return "appear";
    case EventKind::MoveSample: return "move-sample";
    case EventKind::Annihilate: return "annihilate";
  }
  return "move-sample";
}

double scatter_speed(double theta, double c_v) {
  if (!(c_v > 0.0)) {
    throw std::domain_error("scatter_speed: c_v must be positive");
  }
  if (!(theta > 0.0) || !(theta <= kPi / 2.0)) {
    throw std::domain_error("scatter_speed: theta must lie in (0, pi/2]");
  }
  if (std::fabs(theta - kPi / 4.0) <= kAngleTol) {
    throw SingularityError("scatter_speed: pole at theta = pi/4");
  }
  const double cot = std::cos(theta) / std::sin(theta);
  return c_v / (1.0 - cot);
}

double angle_for_boosted_wire(double F, const BoostParameter& boost) {
  if (!(F >= 1.0)) {
    throw std::domain_error("angle_for_boosted_wire: F must be >= 1");
  }
  const double s = std::sqrt(F);
  const double b = boost.beta();
  const double den = s - b;
  if (std::fabs(den) <= kRelTol * (1.0 + s)) {
    throw std::domain_error("angle_for_boosted_wire: degenerate at sqrt(F) = beta");
  }
  return arccot_nonneg(1.0 - (1.0 - s * b) / den);
}

double angle_for_rest_wire(double F1) {
  if (!(F1 >= 1.0)) {
    throw std::domain_error("angle_for_rest_wire: F1 must be >= 1");
  }
  return arccot_nonneg(1.0 - 1.0 / std::sqrt(F1));
}

SurfaceAssembly design_ctc_assembly(double F1, double F2, double beta, AssemblyMode mode,
                                    double c_v) {
  if (!(F1 >= 1.0) || !(F2 >= 1.0)) {
    throw std::domain_error("design_ctc_assembly: F1, F2 must be >= 1");
  }
  const double threshold = ctc_threshold_beta_general(F1, F2);
  if (!(threshold < 1.0)) {
    throw CtcConditionError("design_ctc_assembly: flat wires admit no closed loop");
  }
  double beta_used = beta;
  if (mode == AssemblyMode::Symmetric) {
    beta_used = symmetric_beta(F1, F2);
  } else {
    // Boost must close the loop strictly; the marginal case is the symmetric
    // design's business.
    const BoostParameter check(beta);
    if (!(check.beta() > threshold)) {
      std::ostringstream msg;
      msg << "design_ctc_assembly: beta = " << beta
          << " does not exceed the loop threshold " << threshold;
      throw CtcConditionError(msg.str());
    }
  }
  const BoostParameter boost(beta_used);
  const double theta1 = angle_for_rest_wire(F1);
  const double theta2 = angle_for_boosted_wire(F2, boost);
  const double v1 = scatter_speed(theta1, c_v);
  const double v2 = scatter_speed(theta2, c_v);
  return SurfaceAssembly{theta1, theta2, F1, F2, beta_used, v1, v2, mode};
}

ScatterTimeline simulate_wavefront(const SurfaceAssembly& assembly, int n_samples) {
  if (n_samples < 2) {
    throw std::domain_error("simulate_wavefront: n_samples must be >= 2");
  }
  const double v1 = assembly.v1;
  const double v2 = assembly.v2;
  if (!(v1 > 0.0) || !(v2 < 0.0)) {
    std::ostringstream msg;
    msg << "simulate_wavefront: images never meet (v1 = " << v1 << ", v2 = " << v2
        << "; need v1 > 0 > v2)";
    throw std::domain_error(msg.str());
  }
  const double t_meet = 1.0 / (v1 - v2);
  const double x_meet = v1 * t_meet;

  ScatterTimeline timeline;
  timeline.v1 = v1;
  timeline.v2 = v2;
  timeline.annihilation_time = t_meet;
  timeline.annihilation_x = x_meet;
  timeline.meets_junction =
      std::fabs(x_meet - SurfaceAssembly::kJunctionX) <= kJunctionTol;

  auto& events = timeline.events;
  events.reserve(static_cast<std::size_t>(2 * n_samples) + 3);
  events.push_back(ScatterEvent{0.0, 0.0, ImageId::Left, EventKind::Appear});
  events.push_back(ScatterEvent{0.0, 1.0, ImageId::Right, EventKind::Appear});
  for (int i = 0; i < n_samples; ++i) {
    const double t = t_meet * static_cast<double>(i) / (n_samples - 1);
    events.push_back(ScatterEvent{t, v1 * t, ImageId::Left, EventKind::MoveSample});
    events.push_back(ScatterEvent{t, 1.0 + v2 * t, ImageId::Right, EventKind::MoveSample});
  }
  events.push_back(ScatterEvent{t_meet, x_meet, ImageId::Both, EventKind::Annihilate});

  std::stable_sort(events.begin(), events.end(),
                   [](const ScatterEvent& a, const ScatterEvent& b) {
                     return std::make_tuple(a.time, static_cast<int>(a.kind),
                                            static_cast<int>(a.image)) <
                            std::make_tuple(b.time, static_cast<int>(b.kind),
                                            static_cast<int>(b.image));
                   });
  return timeline;
}

}  // namespace ctcsim
