#pragma once

#include <cmath>
#include <numbers>

namespace geodtri {

enum class Geometry { sphere, hyperbolic, planar };

const char* geometry_name(Geometry g);

// Oriented area of a geodesic triangle.  Canonical ranges: (-2*pi, 2*pi]
// modulo 4*pi on the sphere, (-pi, pi) on the hyperbolic plane, all of R in
// the planar baseline.
struct OrientedArea {
  double value = 0.0;
  Geometry geometry = Geometry::planar;
};

inline constexpr double kPi = std::numbers::pi;

// Default tolerances.  Every operation that needs one takes it as an explicit
// parameter; these are only the defaults.
inline constexpr double kManifoldTol = 1e-9;    // ingestion: allowed constraint violation
inline constexpr double kZeroTol = 1e-8;        // classifier zero threshold, identity-rotation threshold
inline constexpr double kAntipodalTol = 1e-12;  // on 1 + dot_e(p, q)
inline constexpr double kRealizableTol = 1e-12; // hyperbolic: reject when 1 - det^2 below this

// Reduce an angle-like quantity into (-2*pi, 2*pi], the canonical spherical
// area range modulo 4*pi.
inline double canonical_mod_4pi(double x) {
  double r = std::fmod(x, 4.0 * kPi);
  if (r <= -2.0 * kPi) r += 4.0 * kPi;
  if (r > 2.0 * kPi) r -= 4.0 * kPi;
  return r;
}

// Distance between two spherical areas identified modulo 4*pi.
inline double mod_4pi_distance(double a, double b) {
  return std::fabs(canonical_mod_4pi(a - b));
}

inline const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::sphere: return "sphere";
    case Geometry::hyperbolic: return "hyperbolic";
    case Geometry::planar: return "planar";
  }
  return "unknown";
}

}  // namespace geodtri
