#include "geodtri/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include "geodtri/error.hpp"
#include "geodtri/rotation.hpp"

namespace geodtri::hyp {

Point Point::from_ambient(const Vec3& v, double manifold_tol) {
  if (!all_finite(v)) {
    throw_error(errc::not_on_hyperboloid, "hyperboloid point has non-finite coordinates");
  }
  const double q = dot_l(v, v);
  if (v.z <= 0.0 || std::fabs(q - 1.0) > manifold_tol) {
    throw_error(errc::not_on_hyperboloid,
                "point is not on the upper hyperboloid sheet within tolerance");
  }
  return Point((1.0 / std::sqrt(q)) * v);
}

Point Point::from_polar(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || theta < 0.0) {
    throw_error(errc::invalid_argument, "invalid hyperbolic polar coordinates");
  }
  const double s = std::sinh(theta);
  return Point({s * std::cos(phi), s * std::sin(phi), std::cosh(theta)});
}

Point Point::from_disk(const std::complex<double>& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw_error(errc::not_on_hyperboloid, "non-finite disk coordinate");
  }
  const double r2 = std::norm(z);
  if (r2 >= 1.0) {
    throw_error(errc::not_on_hyperboloid, "disk coordinate lies outside the unit disk");
  }
  const double d = 1.0 - r2;
  return Point({2.0 * z.real() / d, 2.0 * z.imag() / d, (1.0 + r2) / d});
}

Point Point::normalized(const Vec3& v) {
  return Point((1.0 / std::sqrt(dot_l(v, v))) * v);
}

Polar Point::polar() const {
  const double theta = std::asinh(std::hypot(v_.x, v_.y));
  double phi = std::atan2(v_.y, v_.x);
  if (phi <= -kPi) phi += 2.0 * kPi;
  return {theta, phi};
}

std::complex<double> Point::disk() const {
  const double d = 1.0 + v_.z;
  return {v_.x / d, v_.y / d};
}

Point midpoint(const Point& p, const Point& q) {
  return Point::normalized(p.ambient() + q.ambient());
}

double side_length(const Point& p, const Point& q) {
  return std::acosh(std::max(1.0, dot_l(p.ambient(), q.ambient())));
}

Midpoints midpoints_of(const Triangle& t) {
  return {midpoint(t.b, t.c), midpoint(t.c, t.a), midpoint(t.a, t.b)};
}

OrientedArea area_from_corners(const Point& a, const Point& b, const Point& c) {
  const Vec3& va = a.ambient();
  const Vec3& vb = b.ambient();
  const Vec3& vc = c.ambient();
  const double re = 1.0 + dot_l(va, vb) + dot_l(vb, vc) + dot_l(vc, va);
  const double im = det3(va, vb, vc);
  return {2.0 * std::atan2(im, re), Geometry::hyperbolic};
}

double sine_half_area(const Point& a, const Point& b, const Point& c) {
  const Vec3& va = a.ambient();
  const Vec3& vb = b.ambient();
  const Vec3& vc = c.ambient();
  const double fab = 1.0 + dot_l(va, vb);
  const double fbc = 1.0 + dot_l(vb, vc);
  const double fca = 1.0 + dot_l(vc, va);
  return det3(va, vb, vc) / std::sqrt(2.0 * fab * fbc * fca);
}

OrientedArea area_from_midpoints(const Midpoints& m, double realizable_tol) {
  const double d = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
  const double rad = 1.0 - d * d;
  if (rad < realizable_tol) {
    throw_error(errc::not_realizable,
                "midpoint determinant reaches 1 in absolute value; no triangle exists");
  }
  return {2.0 * std::atan2(d, std::sqrt(rad)), Geometry::hyperbolic};
}

Triangle reconstruct(const Midpoints& m, double realizable_tol) {
  const Vec3& al = m.alpha.ambient();
  const Vec3& be = m.beta.ambient();
  const Vec3& ga = m.gamma.ambient();
  const double d = det3(al, be, ga);
  const double rad = (1.0 - d) * (1.0 + d);
  if (rad < realizable_tol) {
    throw_error(errc::not_realizable,
                "midpoint determinant reaches 1 in absolute value; no triangle exists");
  }
  const double sq = std::sqrt(rad);
  // Corners as combinations of the midpoint basis: expanding the corner
  // coordinates in a frame with gamma at the pole shows every coefficient is
  // a pairwise Lorentz product over the radicand root, so no frame change is
  // needed and no coordinate ever exceeds the corner scale.
  const double d1 = sum_of_3_products(be.z, ga.z, -be.x, ga.x, -be.y, ga.y) / sq;
  const double d2 = sum_of_3_products(ga.z, al.z, -ga.x, al.x, -ga.y, al.y) / sq;
  const double d3 = sum_of_3_products(al.z, be.z, -al.x, be.x, -al.y, be.y) / sq;
  const Vec3 a = linear_combination(-d1, al, d2, be, d3, ga);
  const Vec3 b = linear_combination(d1, al, -d2, be, d3, ga);
  const Vec3 c = linear_combination(d1, al, d2, be, -d3, ga);
  return {Point::normalized(a), Point::normalized(b), Point::normalized(c)};
}

}  // namespace geodtri::hyp
