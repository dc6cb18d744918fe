#include "geodtri/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "geodtri/error.hpp"
#include "geodtri/rotation.hpp"

namespace geodtri::sphere {

namespace {

// Threshold on |complex argument| below which the area formula is undefined.
constexpr double kArgTol = 1e-12;

void check_antipodal(const Vec3& p, const Vec3& q, double antipodal_tol, errc code) {
  if (1.0 + dot_e(p, q) < antipodal_tol) {
    throw_error(code, "corner pair is antipodal within tolerance");
  }
}

int sign_of(double x) { return x >= 0.0 ? 1 : -1; }

}  // namespace

const char* side_name(Side s) {
  switch (s) {
    case Side::bc: return "bc";
    case Side::ca: return "ca";
    case Side::ab: return "ab";
  }
  return "unknown";
}

const char* midpoint_kind_name(MidpointKind k) {
  switch (k) {
    case MidpointKind::regular: return "regular";
    case MidpointKind::one_zero: return "one_zero";
    case MidpointKind::two_zero: return "two_zero";
    case MidpointKind::orthonormal: return "orthonormal";
  }
  return "unknown";
}

Point Point::from_ambient(const Vec3& v, double manifold_tol) {
  if (!all_finite(v)) throw_error(errc::not_unit, "sphere point has non-finite coordinates");
  const double n = norm_e(v);
  if (std::fabs(n - 1.0) > manifold_tol) {
    throw_error(errc::not_unit, "point is not on the unit sphere within tolerance");
  }
  return Point((1.0 / n) * v);
}

Point Point::from_polar(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw_error(errc::invalid_argument, "non-finite polar coordinates");
  }
  const double s = std::sin(theta);
  return Point({s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

Point Point::from_stereographic(const std::complex<double>& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw_error(errc::invalid_argument, "non-finite stereographic coordinate");
  }
  const double r2 = std::norm(z);
  const double d = r2 + 1.0;
  return Point({2.0 * z.real() / d, 2.0 * z.imag() / d, (r2 - 1.0) / d});
}

Polar Point::polar() const {
  const double theta = std::atan2(std::hypot(v_.x, v_.y), v_.z);
  double phi = std::atan2(v_.y, v_.x);
  if (phi <= -kPi) phi += 2.0 * kPi;
  return {theta, phi};
}

std::complex<double> Point::stereographic() const {
  const double d = 1.0 - v_.z;
  if (d < 1e-12) {
    throw_error(errc::invalid_argument, "stereographic projection undefined at the north pole");
  }
  return {v_.x / d, v_.y / d};
}

Point midpoint(const Point& p, const Point& q, double antipodal_tol) {
  check_antipodal(p.ambient(), q.ambient(), antipodal_tol, errc::antipodal_pair);
  return Point::normalized(p.ambient() + q.ambient());
}

double side_length(const Point& p, const Point& q) {
  return std::acos(std::clamp(dot_e(p.ambient(), q.ambient()), -1.0, 1.0));
}

Midpoints midpoints_of(const Triangle& t, double antipodal_tol) {
  Point alpha = midpoint(t.b, t.c, antipodal_tol);
  Point beta = midpoint(t.c, t.a, antipodal_tol);
  Point gamma = midpoint(t.a, t.b, antipodal_tol);
  if (t.major_arc) {
    switch (*t.major_arc) {
      case Side::bc: alpha = Point::normalized(-alpha.ambient()); break;
      case Side::ca: beta = Point::normalized(-beta.ambient()); break;
      case Side::ab: gamma = Point::normalized(-gamma.ambient()); break;
    }
  }
  return {alpha, beta, gamma};
}

OrientedArea area_from_corners(const Point& a, const Point& b, const Point& c,
                               double antipodal_tol) {
  const Vec3& va = a.ambient();
  const Vec3& vb = b.ambient();
  const Vec3& vc = c.ambient();
  check_antipodal(va, vb, antipodal_tol, errc::antipodal_corners);
  check_antipodal(vb, vc, antipodal_tol, errc::antipodal_corners);
  check_antipodal(vc, va, antipodal_tol, errc::antipodal_corners);
  const double re = 1.0 + dot_e(va, vb) + dot_e(vb, vc) + dot_e(vc, va);
  const double im = det3(va, vb, vc);
  if (std::hypot(re, im) < kArgTol) {
    throw_error(errc::degenerate_arg, "area argument vanishes");
  }
  return {2.0 * std::atan2(im, re), Geometry::sphere};
}

OrientedArea triangle_area(const Triangle& t, double antipodal_tol) {
  if (!t.major_arc) return area_from_corners(t.a, t.b, t.c, antipodal_tol);
  const Midpoints m = midpoints_of(t, antipodal_tol);
  // Split at the major side's midpoint; both pieces are all-minor triangles
  // and the shared edge cancels, so the oriented areas add modulo 4*pi.
  Point split = m.gamma;
  Point p = t.a, q = t.b, r = t.c;
  switch (*t.major_arc) {
    case Side::bc: split = m.alpha; p = t.b; q = t.c; r = t.a; break;
    case Side::ca: split = m.beta; p = t.c; q = t.a; r = t.b; break;
    case Side::ab: break;
  }
  const double part1 = area_from_corners(split, q, r, antipodal_tol).value;
  const double part2 = area_from_corners(split, r, p, antipodal_tol).value;
  return {canonical_mod_4pi(part1 + part2), Geometry::sphere};
}

double sine_half_area(const Point& a, const Point& b, const Point& c,
                      double antipodal_tol) {
  const Vec3& va = a.ambient();
  const Vec3& vb = b.ambient();
  const Vec3& vc = c.ambient();
  const double fab = 1.0 + dot_e(va, vb);
  const double fbc = 1.0 + dot_e(vb, vc);
  const double fca = 1.0 + dot_e(vc, va);
  if (fab < antipodal_tol || fbc < antipodal_tol || fca < antipodal_tol) {
    throw_error(errc::antipodal_corners, "corner pair is antipodal within tolerance");
  }
  return det3(va, vb, vc) / std::sqrt(2.0 * fab * fbc * fca);
}

MidpointClass classify_midpoints(const Midpoints& m, double zero_tol) {
  MidpointClass cls;
  cls.dot_alpha_beta = dot_e(m.alpha.ambient(), m.beta.ambient());
  cls.dot_beta_gamma = dot_e(m.beta.ambient(), m.gamma.ambient());
  cls.dot_gamma_alpha = dot_e(m.gamma.ambient(), m.alpha.ambient());
  const double d[3] = {cls.dot_alpha_beta, cls.dot_beta_gamma, cls.dot_gamma_alpha};
  int zeros = 0;
  int sign_sum = 0;
  for (double v : d) {
    if (std::fabs(v) < zero_tol) {
      ++zeros;
    } else {
      sign_sum += sign_of(v);
    }
  }
  switch (zeros) {
    case 0: cls.kind = MidpointKind::regular; break;
    case 1: cls.kind = MidpointKind::one_zero; break;
    case 2: cls.kind = MidpointKind::two_zero; break;
    default: cls.kind = MidpointKind::orthonormal; break;
  }
  cls.eta = sign_sum >= 0 ? 1 : -1;
  return cls;
}

OrientedArea area_from_midpoints(const Midpoints& m, double zero_tol) {
  const MidpointClass cls = classify_midpoints(m, zero_tol);
  const double d = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
  switch (cls.kind) {
    case MidpointKind::regular: {
      const double re = cls.eta * std::sqrt(std::max(0.0, 1.0 - d * d));
      return {2.0 * std::atan2(d, re), Geometry::sphere};
    }
    case MidpointKind::orthonormal:
      // exp(i*Omega/2) = i * det with det = +-1; the triangle itself is
      // undetermined but the area is pinned to +-pi.
      return {std::copysign(kPi, d), Geometry::sphere};
    default:
      throw_error(errc::singular_midpoints,
                  "midpoint triple is singular; no triangle area is determined");
  }
}

namespace {

struct Candidate {
  Vec3 a, b, c;
  int majors = 0;
  std::optional<Side> flag;
};

Candidate evaluate_candidate(const Midpoints& m, const Vec3& a, const Vec3& b,
                             const Vec3& c) {
  Candidate cand{a, b, c, 0, std::nullopt};
  const Vec3* mids[3] = {&m.alpha.ambient(), &m.beta.ambient(), &m.gamma.ambient()};
  const Vec3 sums[3] = {b + c, c + a, a + b};
  const Side sides[3] = {Side::bc, Side::ca, Side::ab};
  for (int i = 0; i < 3; ++i) {
    // The given midpoint lies on exactly one of the two arcs over this corner
    // pair; the major arc carries the negated normalized average.
    if (dot_e(*mids[i], sums[i]) < 0.0) {
      ++cand.majors;
      cand.flag = sides[i];
    }
  }
  return cand;
}

// Resolve the global sign ambiguity of a reconstruction: of the two antipodal
// corner triples only one realizes the midpoints with at most one major-arc
// side.
Triangle select_candidate(const Midpoints& m, const Vec3& a, const Vec3& b,
                          const Vec3& c, double antipodal_tol) {
  const Vec3 pairs[3][2] = {{b, c}, {c, a}, {a, b}};
  for (const auto& pq : pairs) {
    if (1.0 + dot_e(pq[0], pq[1]) < antipodal_tol) {
      throw_error(errc::singular_midpoints,
                  "reconstructed corner pair is antipodal; side arcs are ambiguous");
    }
  }
  const Candidate c1 = evaluate_candidate(m, a, b, c);
  const Candidate c2 = evaluate_candidate(m, -a, -b, -c);
  const Candidate& pick = c1.majors <= 1 ? c1 : c2;
  if (pick.majors > 1) {
    throw_error(errc::singular_midpoints, "no corner assignment with at most one major arc");
  }
  return {Point::normalized(pick.a), Point::normalized(pick.b),
          Point::normalized(pick.c), pick.flag};
}

void reject_singular_class(const MidpointClass& cls) {
  if (cls.kind == MidpointKind::one_zero || cls.kind == MidpointKind::two_zero) {
    throw_error(errc::singular_midpoints,
                "midpoint triple is singular; corners are not determined");
  }
}

}  // namespace

Triangle reconstruct(const Midpoints& m, double zero_tol, double antipodal_tol) {
  const MidpointClass cls = classify_midpoints(m, zero_tol);
  reject_singular_class(cls);
  if (cls.kind == MidpointKind::orthonormal) {
    throw_error(errc::undetermined,
                "orthonormal midpoint frame; every candidate triangle is consistent");
  }
  const Rotation composite = point_reflection_matrix(m.gamma.ambient()) *
                             point_reflection_matrix(m.beta.ambient()) *
                             point_reflection_matrix(m.alpha.ambient());
  Vec3 b;
  try {
    b = rotation_axis(composite, zero_tol).first;
  } catch (const GeoError& e) {
    if (e.code() == errc::identity_rotation) {
      throw_error(errc::undetermined,
                  "midpoint half-turns compose to the identity; triangle undetermined");
    }
    throw;
  }
  const Vec3 c = point_reflection(m.alpha.ambient(), b);
  const Vec3 a = point_reflection(m.beta.ambient(), c);
  return select_candidate(m, a, b, c, antipodal_tol);
}

Triangle reconstruct_closed_form(const Midpoints& m, double zero_tol,
                                 double antipodal_tol) {
  const MidpointClass cls = classify_midpoints(m, zero_tol);
  reject_singular_class(cls);
  if (cls.kind == MidpointKind::orthonormal) {
    throw_error(errc::singular_midpoints,
                "midpoint frame is orthonormal; the inversion denominator vanishes");
  }
  const Vec3& al = m.alpha.ambient();
  const Vec3& be = m.beta.ambient();
  const Vec3& ga = m.gamma.ambient();
  const double d = det3(al, be, ga);
  const double rad = (1.0 - d) * (1.0 + d);
  if (rad < zero_tol * zero_tol) {
    throw_error(errc::singular_midpoints, "inversion radicand vanishes within tolerance");
  }
  const double sq = std::sqrt(rad);
  // Corners as combinations of the midpoint basis: expanding the corner
  // coordinates in a frame with gamma at the pole shows every coefficient is
  // a pairwise inner product over the radicand root, so no frame change is
  // needed.  The overall sign is fixed afterwards by the major-arc rule.
  const double d1 = sum_of_3_products(be.x, ga.x, be.y, ga.y, be.z, ga.z) / sq;
  const double d2 = sum_of_3_products(ga.x, al.x, ga.y, al.y, ga.z, al.z) / sq;
  const double d3 = sum_of_3_products(al.x, be.x, al.y, be.y, al.z, be.z) / sq;
  const Vec3 a = linear_combination(-d1, al, d2, be, d3, ga);
  const Vec3 b = linear_combination(d1, al, -d2, be, d3, ga);
  const Vec3 c = linear_combination(d1, al, d2, be, -d3, ga);
  return select_candidate(m, a, b, c, antipodal_tol);
}

}  // namespace geodtri::sphere
