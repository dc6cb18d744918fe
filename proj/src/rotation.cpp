#include "geodtri/rotation.hpp"

#include <cmath>

#include "geodtri/error.hpp"

namespace geodtri {

namespace {

const Mat3 kLorentzSignature{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};

}  // namespace

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    }
  }
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  }
  return r;
}

double Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double frobenius_distance(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double d = a.m[i][j] - b.m[i][j];
      s += d * d;
    }
  }
  return std::sqrt(s);
}

double Rotation::defect() const {
  const double ortho = frobenius_distance(m_.transposed() * m_, Mat3::identity());
  return std::max(ortho, std::fabs(m_.det() - 1.0));
}

LorentzMap LorentzMap::inverse() const {
  return LorentzMap(kLorentzSignature * m_.transposed() * kLorentzSignature);
}

double LorentzMap::defect() const {
  return frobenius_distance(m_.transposed() * kLorentzSignature * m_, kLorentzSignature);
}

Vec3 point_reflection(const Vec3& axis, const Vec3& p, double tol) {
  const double n = norm_e(axis);
  if (!(n > tol)) throw_error(errc::zero_axis, "point reflection axis has zero length");
  const Vec3 u = (1.0 / n) * axis;
  return 2.0 * dot_e(p, u) * u - p;
}

Rotation point_reflection_matrix(const Vec3& axis, double tol) {
  const double n = norm_e(axis);
  if (!(n > tol)) throw_error(errc::zero_axis, "point reflection axis has zero length");
  const Vec3 u = (1.0 / n) * axis;
  Mat3 r;
  const double uu[3] = {u.x, u.y, u.z};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = 2.0 * uu[i] * uu[j] - (i == j ? 1.0 : 0.0);
    }
  }
  return Rotation(r);
}

std::pair<Vec3, Vec3> rotation_axis(const Rotation& r, double identity_tol) {
  const Mat3& m = r.matrix();
  if (frobenius_distance(m, Mat3::identity()) < identity_tol) {
    throw_error(errc::identity_rotation, "rotation is the identity; axis undefined");
  }

  // sin(angle) * axis, read off the antisymmetric part.
  const Vec3 v{0.5 * (m.m[2][1] - m.m[1][2]), 0.5 * (m.m[0][2] - m.m[2][0]),
               0.5 * (m.m[1][0] - m.m[0][1])};
  const double trace = m.m[0][0] + m.m[1][1] + m.m[2][2];
  Vec3 axis;
  if (trace >= 1.0) {
    // cos(angle) >= 0: |sin(angle)| is comparable to ||R - I||, so the
    // antisymmetric part determines the axis with no cancellation.
    axis = normalized_e(v);
  } else {
    // Angle beyond pi/2, where sin(angle) may vanish: R + R^T - (trace - 1) I
    // equals 2(1 - cos(angle)) times the projector onto the axis, a rank-one
    // matrix whose scale factor exceeds 2.  Read the axis off its largest
    // diagonal column and align the sign with the antisymmetric part (a no-op
    // at angle pi, where both signs describe the same rotation).
    const double lam = trace - 1.0;
    Mat3 s;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        s.m[i][j] = m.m[i][j] + m.m[j][i] - (i == j ? lam : 0.0);
      }
    }
    int jmax = 0;
    for (int j = 1; j < 3; ++j) {
      if (s.m[j][j] > s.m[jmax][jmax]) jmax = j;
    }
    axis = normalized_e({s.m[0][jmax], s.m[1][jmax], s.m[2][jmax]});
    if (dot_e(axis, v) < 0.0) axis = -axis;
  }
  return {axis, -axis};
}

Rotation rotate_to_north(const Vec3& p, double manifold_tol) {
  if (!all_finite(p) || std::fabs(norm_e(p) - 1.0) > manifold_tol) {
    throw_error(errc::not_unit, "rotate_to_north requires a unit vector");
  }
  const Vec3 u = normalized_e(p);
  const Vec3 axis = cross(u, Vec3{0, 0, 1});
  const double s = norm_e(axis);
  const double c = u.z;
  if (s < 1e-15) {
    if (c > 0.0) return Rotation();
    return Rotation(Mat3{{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}});
  }
  const Vec3 n = (1.0 / s) * axis;
  // Rodrigues form c*I + s*[n]_x + (1-c)*n n^T.
  Mat3 r;
  const double nn[3] = {n.x, n.y, n.z};
  const double k[3][3] = {{0, -n.z, n.y}, {n.z, 0, -n.x}, {-n.y, n.x, 0}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = c * (i == j ? 1.0 : 0.0) + s * k[i][j] + (1.0 - c) * nn[i] * nn[j];
    }
  }
  return Rotation(r);
}

LorentzMap boost_to_north(const Vec3& p, double manifold_tol) {
  if (!all_finite(p) || std::fabs(dot_l(p, p) - 1.0) > manifold_tol || p.z <= 0.0) {
    throw_error(errc::not_on_hyperboloid, "boost_to_north requires an upper-sheet hyperboloid point");
  }
  const double s = std::hypot(p.x, p.y);  // sinh(theta)
  if (s < 1e-15) return LorentzMap();
  const double c = p.z;  // cosh(theta)
  const double ux = p.x / s;
  const double uy = p.y / s;
  Mat3 b{{{1.0 + (c - 1.0) * ux * ux, (c - 1.0) * ux * uy, -s * ux},
          {(c - 1.0) * ux * uy, 1.0 + (c - 1.0) * uy * uy, -s * uy},
          {-s * ux, -s * uy, c}}};
  return LorentzMap(b);
}

}  // namespace geodtri
