#pragma once

#include "geodtri/hyperbolic.hpp"
#include "geodtri/sphere.hpp"
#include "geodtri/vec3.hpp"

namespace geodtri::oracle {

struct PlanarPoint {
  double u = 0.0;
  double v = 0.0;
};

// Signed area of a planar triangle, 0.5 * det2(b - a, c - a).
double planar_area(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c);

// Signed area recovered from planar side midpoints: 2 * det2(beta - alpha,
// gamma - alpha).  The planar inversion doubles the midpoint triangle's area.
double planar_area_from_midpoints(const PlanarPoint& alpha, const PlanarPoint& beta,
                                  const PlanarPoint& gamma);

// Oriented area by angle excess: sign(det3) * (A + B + C - pi), with interior
// angles computed from the tangent vectors of the sides at each corner.
// Requires all sides minor.  Throws degenerate_triangle when corners coincide
// or a tangent vanishes.
double excess_area(const sphere::Point& a, const sphere::Point& b, const sphere::Point& c);

// Oriented area by angle deficit: sign(det3) * (pi - (A + B + C)).
double excess_area(const hyp::Point& a, const hyp::Point& b, const hyp::Point& c);

// Oriented area by adaptive Simpson quadrature of the sector swept from
// corner a over the opposite side.  The sign is fixed by sign(det3).  Sphere:
// corner a moves to the pole, the side becomes cot(theta(phi)) = A sin(phi)
// + B cos(phi), and the reduced radial integral is taken over the azimuth
// span, cut at the extrema of the cotangent.  Hyperbolic: the sweep is taken
// in arclength along the side, where the integrand is bounded by 1.  Throws
// degenerate_triangle on collinear or coincident configurations,
// quadrature_failure when max_evals is exhausted.
double quadrature_area(const sphere::Point& a, const sphere::Point& b,
                       const sphere::Point& c, double tol = 1e-8,
                       int max_evals = 100000);

double quadrature_area(const hyp::Point& a, const hyp::Point& b, const hyp::Point& c,
                       double tol = 1e-8, int max_evals = 100000);

}  // namespace geodtri::oracle
