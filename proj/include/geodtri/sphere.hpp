#pragma once

#include <complex>
#include <optional>

#include "geodtri/area.hpp"
#include "geodtri/vec3.hpp"

namespace geodtri::sphere {

struct Polar {
  double theta = 0.0;  // colatitude in [0, pi]
  double phi = 0.0;    // azimuth in (-pi, pi]
};

// Point on the unit sphere.  Ambient coordinates are kept unit-normalized;
// factories re-normalize inputs within manifold_tol of the sphere and reject
// anything worse.
class Point {
 public:
  static Point from_ambient(const Vec3& v, double manifold_tol = kManifoldTol);
  static Point from_polar(double theta, double phi);
  // Stereographic coordinate z = w / (1 - h), undefined at the north pole.
  static Point from_stereographic(const std::complex<double>& z);

  const Vec3& ambient() const { return v_; }
  Polar polar() const;
  std::complex<double> stereographic() const;

  // Trusted construction from an ambient vector known to be unit length up to
  // roundoff; normalizes unconditionally.
  static Point normalized(const Vec3& v) { return Point(normalized_e(v)); }

 private:
  explicit Point(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

enum class Side { bc, ca, ab };

const char* side_name(Side s);

// Geodesic triangle with labeled corners.  At most one side may be flagged as
// traversed along its major arc; unflagged sides are minor arcs.
struct Triangle {
  Point a, b, c;
  std::optional<Side> major_arc;
};

// Side midpoints, labeled opposite the corners: alpha on bc, beta on ca,
// gamma on ab.
struct Midpoints {
  Point alpha, beta, gamma;
};

enum class MidpointKind { regular, one_zero, two_zero, orthonormal };

const char* midpoint_kind_name(MidpointKind k);

// Classification of a midpoint triple by the zero pattern of its pairwise
// inner products.  eta is the majority sign of the three products and is
// meaningful only for the regular class.
struct MidpointClass {
  MidpointKind kind = MidpointKind::regular;
  int eta = 1;
  double dot_alpha_beta = 0.0;
  double dot_beta_gamma = 0.0;
  double dot_gamma_alpha = 0.0;
};

// Midpoint of the minor arc pq, the normalized average.  Throws
// antipodal_pair when 1 + dot_e(p,q) < antipodal_tol.
Point midpoint(const Point& p, const Point& q, double antipodal_tol = kAntipodalTol);

// Geodesic distance in [0, pi].
double side_length(const Point& p, const Point& q);

// Side midpoints of a triangle.  The midpoint of the side flagged as a major
// arc is the negated normalized average; the flagged side's stored corners
// are unchanged.
Midpoints midpoints_of(const Triangle& t, double antipodal_tol = kAntipodalTol);

// Oriented area from corners, all sides minor:
// Omega = 2 * arg(1 + <a,b> + <b,c> + <c,a> + i * det3(a,b,c)),
// canonical in (-2*pi, 2*pi].  Throws antipodal_corners when a corner pair is
// antipodal within tolerance, degenerate_arg when the complex argument
// vanishes.
OrientedArea area_from_corners(const Point& a, const Point& b, const Point& c,
                               double antipodal_tol = kAntipodalTol);

// Oriented area of a triangle, honoring a major-arc flag by splitting at the
// flagged side's midpoint and summing the two all-minor pieces modulo 4*pi.
OrientedArea triangle_area(const Triangle& t, double antipodal_tol = kAntipodalTol);

// sin(Omega/2) = det3(a,b,c) / sqrt(2 (1+<a,b>) (1+<b,c>) (1+<c,a>)).
double sine_half_area(const Point& a, const Point& b, const Point& c,
                      double antipodal_tol = kAntipodalTol);

MidpointClass classify_midpoints(const Midpoints& m, double zero_tol = kZeroTol);

// Oriented area of the triangle determined by a midpoint triple:
// exp(i*Omega/2) = eta * sqrt(1 - d^2) + i * d with d = det3(midpoints) and
// eta the majority sign.  Orthonormal frames yield Omega = pi * sign(d);
// the one-zero and two-zero classes throw singular_midpoints.
OrientedArea area_from_midpoints(const Midpoints& m, double zero_tol = kZeroTol);

// Corner recovery through the composition of the three midpoint half-turns:
// b is a fixed point of the composite rotation, c and a follow by reflecting
// through alpha and beta, and the sign ambiguity is resolved by requiring at
// most one major-arc side.  Throws undetermined for orthonormal frames (the
// composite is the identity) and singular_midpoints for the other singular
// classes or when a reconstructed corner pair is antipodal within tolerance.
Triangle reconstruct(const Midpoints& m, double zero_tol = kZeroTol,
                     double antipodal_tol = kAntipodalTol);

// Corner recovery in closed form: each corner is a fixed linear combination
// of the midpoint triple whose coefficients are the pairwise midpoint inner
// products divided by sqrt(1 - det3^2).  Resolves the same sign ambiguity by
// the same major-arc rule, so it agrees with reconstruct() on every regular
// triple.
Triangle reconstruct_closed_form(const Midpoints& m, double zero_tol = kZeroTol,
                                 double antipodal_tol = kAntipodalTol);

}  // namespace geodtri::sphere
