#pragma once

#include <complex>

#include "geodtri/area.hpp"
#include "geodtri/vec3.hpp"

namespace geodtri::hyp {

struct Polar {
  double theta = 0.0;  // geodesic distance from (0,0,1), in [0, inf)
  double phi = 0.0;    // azimuth in (-pi, pi]
};

// Point on the upper sheet of the hyperboloid <p,p>_L = 1, z > 0.  Factories
// re-normalize inputs within manifold_tol of the constraint and reject
// anything worse.
class Point {
 public:
  static Point from_ambient(const Vec3& v, double manifold_tol = kManifoldTol);
  static Point from_polar(double theta, double phi);
  // Poincare disk coordinate z = w / (1 + h), |z| < 1.
  static Point from_disk(const std::complex<double>& z);

  const Vec3& ambient() const { return v_; }
  Polar polar() const;
  std::complex<double> disk() const;

  // Trusted construction from an ambient vector with <v,v>_L > 0 and v.z > 0
  // up to roundoff; normalizes unconditionally.
  static Point normalized(const Vec3& v);

 private:
  explicit Point(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

struct Triangle {
  Point a, b, c;
};

// Side midpoints, labeled opposite the corners: alpha on bc, beta on ca,
// gamma on ab.
struct Midpoints {
  Point alpha, beta, gamma;
};

// Midpoint of the geodesic segment pq, the Lorentz-normalized average.
// Total: <p+q, p+q>_L = 2 + 2<p,q>_L >= 4 on the upper sheet.
Point midpoint(const Point& p, const Point& q);

// Geodesic distance arccosh(<p,q>_L) in [0, inf).
double side_length(const Point& p, const Point& q);

Midpoints midpoints_of(const Triangle& t);

// Oriented area from corners:
// Omega = 2 * arg(1 + <a,b>_L + <b,c>_L + <c,a>_L + i * det3(a,b,c)).
// The real part is at least 4, so Omega always lands in (-pi, pi).
OrientedArea area_from_corners(const Point& a, const Point& b, const Point& c);

// sin(Omega/2) = det3(a,b,c) / sqrt(2 (1+<a,b>_L) (1+<b,c>_L) (1+<c,a>_L)).
double sine_half_area(const Point& a, const Point& b, const Point& c);

// Oriented area of the triangle determined by a midpoint triple:
// exp(i*Omega/2) = sqrt(1 - d^2) + i * d with d = det3(midpoints).  A triple
// is realizable iff |d| < 1; throws not_realizable when 1 - d^2 <
// realizable_tol.
OrientedArea area_from_midpoints(const Midpoints& m, double realizable_tol = kRealizableTol);

// Corner recovery: each corner is a fixed linear combination of the midpoint
// triple whose coefficients are the pairwise Lorentz products divided by
// sqrt(1 - det3^2).  The inversion is unique; throws not_realizable when
// 1 - det3(midpoints)^2 < realizable_tol.
Triangle reconstruct(const Midpoints& m, double realizable_tol = kRealizableTol);

}  // namespace geodtri::hyp
