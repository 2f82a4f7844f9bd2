#include "ctcsim/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ctcsim/errors.hpp"

namespace ctcsim {

WireProfile::WireProfile(double radius, int exponent)
    : radius(radius), exponent(exponent) {
  if (!(radius > 0.0)) {
    throw std::domain_error("WireProfile: radius must be positive");
  }
  if (exponent < 2) {
    throw std::domain_error("WireProfile: exponent must be an integer >= 2");
  }
}

double MetricCoefficients::determinant() const { return g_tt * g_zz - g_tz * g_tz; }

bool MetricCoefficients::is_lorentzian() const { return determinant() < 0.0; }

std::pair<double, double> MetricCoefficients::null_speeds() const {
  // ds^2 = 0  =>  g_zz s^2 + 2 g_tz s + g_tt = 0 with s = dz/dt.
  if (g_zz == 0.0) {
    throw SingularityError("null cone degenerate: g_zz = 0");
  }
  const double disc = g_tz * g_tz - g_zz * g_tt;
  if (disc < 0.0) {
    throw std::domain_error("no real null directions: non-Lorentzian coefficients");
  }
  const double sq = std::sqrt(disc);
  const double q = -(g_tz + std::copysign(sq, g_tz));
  if (q == 0.0) {
    return {0.0, 0.0};
  }
  const double r1 = q / g_zz;
  const double r2 = g_tt / q;
  return (r1 >= r2) ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

TwoWireGeometry::TwoWireGeometry(double separation, double path_length, double wire_radius,
                                 double separation_ratio)
    : separation(separation), path_length(path_length), wire_radius(wire_radius) {
  if (!(wire_radius > 0.0) || !(path_length > 0.0) || !(separation_ratio > 0.0)) {
    throw std::domain_error("TwoWireGeometry: lengths must be positive");
  }
  if (!(2.0 * wire_radius < separation)) {
    throw std::domain_error("TwoWireGeometry: separation must exceed the wire diameter");
  }
  if (!(separation <= path_length / separation_ratio)) {
    throw std::domain_error(
        "TwoWireGeometry: separation must be small against the path length (d <= L/" +
        std::to_string(separation_ratio) + ")");
  }
}

double shape_function(const WireProfile& profile, double r) {
  if (!(r > 0.0)) {
    throw std::domain_error("shape_function: r <= 0 hits the central singularity");
  }
  if (r > profile.radius) {
    return 1.0;
  }
  return 1.0 + std::pow(1.0 / r - 1.0 / profile.radius, profile.exponent);
}

double axial_light_speed(double F, double c_v) {
  if (!(F >= 1.0)) {
    throw std::domain_error("axial_light_speed: F must be >= 1");
  }
  if (!(c_v > 0.0)) {
    throw std::domain_error("axial_light_speed: c_v must be positive");
  }
  return c_v * std::sqrt(F);
}

MetricCoefficients axial_metric(double F, double c_v) {
  if (!(F >= 1.0)) {
    throw std::domain_error("axial_metric: F must be >= 1");
  }
  if (!(c_v > 0.0)) {
    throw std::domain_error("axial_metric: c_v must be positive");
  }
  return MetricCoefficients{-c_v * c_v * F, 0.0, 1.0};
}

}  // namespace ctcsim
