#pragma once

#include <utility>

#include "geodtri/area.hpp"
#include "geodtri/vec3.hpp"

namespace geodtri {

struct Mat3 {
  double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  static Mat3 identity() { return Mat3{}; }

  Vec3 apply(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  Mat3 operator*(const Mat3& o) const;
  Mat3 transposed() const;
  double det() const;
};

double frobenius_distance(const Mat3& a, const Mat3& b);

// Proper rotation of R^3.  Invariants (checked by tests, not constructors):
// M^T M = I within tolerance and det M = +1.
class Rotation {
 public:
  Rotation() = default;
  explicit Rotation(const Mat3& m) : m_(m) {}

  Vec3 apply(const Vec3& v) const { return m_.apply(v); }
  Rotation operator*(const Rotation& o) const { return Rotation(m_ * o.m_); }
  Rotation inverse() const { return Rotation(m_.transposed()); }
  const Mat3& matrix() const { return m_; }

  // max(||M^T M - I||_F, |det M - 1|); zero for an exact rotation.
  double defect() const;

 private:
  Mat3 m_;
};

// Linear map of R^(2,1) preserving the Lorentz product, restricted to the
// orthochronous component (upper hyperboloid sheet preserved).
class LorentzMap {
 public:
  LorentzMap() = default;
  explicit LorentzMap(const Mat3& m) : m_(m) {}

  Vec3 apply(const Vec3& v) const { return m_.apply(v); }
  LorentzMap operator*(const LorentzMap& o) const { return LorentzMap(m_ * o.m_); }
  LorentzMap inverse() const;
  const Mat3& matrix() const { return m_; }

  // ||M^T J M - J||_F with J = diag(-1, -1, 1); zero for an exact map.
  double defect() const;

 private:
  Mat3 m_;
};

// Half-turn of the sphere about the line through axis: 2<p,u>u - p with u the
// normalized axis.  Throws zero_axis when ||axis|| < tol.
Vec3 point_reflection(const Vec3& axis, const Vec3& p, double tol = kAntipodalTol);

Rotation point_reflection_matrix(const Vec3& axis, double tol = kAntipodalTol);

// Both unit fixed points {u, -u} of a non-identity rotation.  Uses the
// antisymmetric part when trace >= 1 (angle up to pi/2) and the rank-one
// symmetric combination R + R^T - (trace - 1) I beyond, so the extraction
// stays first-order accurate near both angle 0 and angle pi.  Throws
// identity_rotation when ||R - I||_F < identity_tol.
std::pair<Vec3, Vec3> rotation_axis(const Rotation& r, double identity_tol = kZeroTol);

// Rotation mapping the given unit vector to (0,0,1).  Throws not_unit when
// | ||p|| - 1 | > manifold_tol.
Rotation rotate_to_north(const Vec3& p, double manifold_tol = kManifoldTol);

// Pure boost mapping the given hyperboloid point to (0,0,1).  Throws
// not_on_hyperboloid when |<p,p>_L - 1| > manifold_tol or p.z <= 0.
LorentzMap boost_to_north(const Vec3& p, double manifold_tol = kManifoldTol);

}  // namespace geodtri
