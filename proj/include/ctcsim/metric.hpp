#ifndef CTCSIM_METRIC_HPP
#define CTCSIM_METRIC_HPP

#include <utility>

namespace ctcsim {

/// Radial profile of the effective refractive factor F(r) around a wire:
/// F = 1 + (1/r - 1/R)^n inside the radius, F = 1 outside. The exponent is
/// restricted to integers n >= 2 so that F matches the flat exterior with a
/// continuous first derivative at r = R.
struct WireProfile {
  double radius;  // R > 0
  int exponent;   // n >= 2

  WireProfile(double radius, int exponent);
};

/// Quadratic form of a 1+1D line element,
///   ds^2 = g_tt dt^2 + 2 g_tz dt dz + g_zz dz^2.
/// Holds the coefficients of every metric presentation used in this library
/// (rest wire, boosted wire, pulse form).
struct MetricCoefficients {
  double g_tt;  // coefficient of dt^2 (speed-squared units)
  double g_tz;  // half the cross coefficient of dt dz (speed units)
  double g_zz;  // coefficient of dz^2 (dimensionless)

  // g_tt*g_zz - g_tz^2; negative for Lorentzian signature.
  double determinant() const;
  bool is_lorentzian() const;

  // dz/dt roots of ds^2 = 0, largest first. Throws SingularityError when the
  // null cone degenerates (g_zz = 0).
  std::pair<double, double> null_speeds() const;
};

/// Two parallel wires at separation d with 2R < d << L, where L is the axial
/// path length. "<<" is enforced as d <= L / separation_ratio.
struct TwoWireGeometry {
  double separation;   // d
  double path_length;  // L
  double wire_radius;  // R

  TwoWireGeometry(double separation, double path_length, double wire_radius,
                  double separation_ratio = 100.0);
};

/// F(r) for the given profile. r = 0 is the central singularity; r <= 0 is
/// rejected with std::domain_error.
double shape_function(const WireProfile& profile, double r);

/// Effective axial light speed c_z = c_v * sqrt(F) of a wire at rest.
double axial_light_speed(double F, double c_v);

/// Axial 1+1D metric of a wire at rest: ds^2 = -c_v^2 F dt^2 + dz^2.
MetricCoefficients axial_metric(double F, double c_v);

}  // namespace ctcsim

#endif  // CTCSIM_METRIC_HPP
