#ifndef CTCSIM_OPTICS_HPP
#define CTCSIM_OPTICS_HPP

#include <string_view>
#include <vector>

#include "ctcsim/kinematics.hpp"

namespace ctcsim {

enum class AssemblyMode {
  Symmetric,  // boost solved so the two image speeds are +/- the same value
  AsGiven,    // boost taken as passed; must satisfy the strict loop condition
};

enum class ImageId { Left, Right, Both };
enum class EventKind { Appear, MoveSample, Annihilate };

std::string_view to_string(AssemblyMode mode);
std::string_view to_string(ImageId image);
std::string_view to_string(EventKind kind);

/// Two flat scattering surfaces over the unit x interval: surface 1 covers
/// x in [0, 1/2] at angle theta1 > 45 deg (positive image speed), surface 2
/// covers x in [1/2, 1] at theta2 < 45 deg (negative image speed). Angles in
/// radians; speeds in units of c_v.
struct SurfaceAssembly {
  double theta1;
  double theta2;
  double f1;
  double f2;
  double beta;
  double v1;  // scatter_speed(theta1) > 0
  double v2;  // scatter_speed(theta2) < 0
  AssemblyMode mode;

  static constexpr double kJunctionX = 0.5;
};

struct ScatterEvent {
  double time;
  double x;
  ImageId image;
  EventKind kind;
};

/// Analytic image timeline: both images appear at t = 0 at their outer ends
/// and move linearly until they meet. Events are ordered by (time, kind,
/// image) with Appear < MoveSample < Annihilate.
struct ScatterTimeline {
  std::vector<ScatterEvent> events;
  double v1;
  double v2;
  double annihilation_time;
  double annihilation_x;
  bool meets_junction;  // |annihilation_x - 1/2| <= 1e-9
};

/// Apparent speed of the wavefront/surface intersection along x:
/// c_v / (1 - cot(theta)). Positive for theta > 45 deg, negative below, with
/// a pole at 45 deg (rejected within tolerance). theta in radians, restricted
/// to (0, pi/2).
double scatter_speed(double theta, double c_v = 1.0);

/// Surface angle whose image reproduces the signed return-leg speed of a
/// boosted wire: arccot[1 - (1 - sqrt(F) beta) / (sqrt(F) - beta)]. Returns
/// exactly pi/4 on the negative-time boundary sqrt(F) beta = 1.
double angle_for_boosted_wire(double F, const BoostParameter& boost);

/// Surface angle reproducing the rest-wire speed c_v sqrt(F1):
/// arccot(1 - 1/sqrt(F1)), in (pi/4, pi/2].
double angle_for_rest_wire(double F1);

/// Build the two-surface assembly. Symmetric mode solves the boost so that
/// v1 = -v2 (the marginal, zero-total-time design) and ignores the beta
/// argument; AsGiven requires beta strictly above the loop threshold and
/// throws CtcConditionError otherwise.
SurfaceAssembly design_ctc_assembly(double F1, double F2, double beta, AssemblyMode mode,
                                    double c_v = 1.0);

/// Analytic timeline of the two images: appearance at the outer ends,
/// n_samples evenly spaced trajectory samples per image, one annihilation
/// where the trajectories meet. Times are in units of (unit length)/c_v.
ScatterTimeline simulate_wavefront(const SurfaceAssembly& assembly, int n_samples);

}  // namespace ctcsim

#endif  // CTCSIM_OPTICS_HPP
