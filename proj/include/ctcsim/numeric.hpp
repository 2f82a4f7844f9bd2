#ifndef CTCSIM_NUMERIC_HPP
#define CTCSIM_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ctcsim {

// Default relative tolerance for comparisons at region boundaries.
inline constexpr double kRelTol = 1e-12;

inline constexpr double kPi = std::numbers::pi;

inline bool nearly_equal(double a, double b, double rel_tol = kRelTol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= rel_tol * scale;
}

inline constexpr double deg_from_rad(double rad) { return rad * (180.0 / kPi); }
inline constexpr double rad_from_deg(double deg) { return deg * (kPi / 180.0); }

}  // namespace ctcsim

#endif  // CTCSIM_NUMERIC_HPP
