#pragma once

#include <cmath>
#include <complex>

namespace geodtri {

// Ambient coordinate vector for both model surfaces.  The unit sphere lives
// in Euclidean R^3; the hyperboloid model lives in R^(2,1) with the Lorentz
// product <(w,h),(w',h')> = h*h' - Re(conj(w)*w'), where w = x + iy is the
// horizontal pair and h = z the vertical coordinate.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  std::complex<double> w() const { return {x, y}; }
  double h() const { return z; }

  static Vec3 from_wh(const std::complex<double>& w, double h) {
    return {w.real(), w.imag(), h};
  }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}

inline Vec3 operator*(const Vec3& a, double s) { return s * a; }

inline double dot_e(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double dot_l(const Vec3& a, const Vec3& b) {
  return a.z * b.z - a.x * b.x - a.y * b.y;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// a*b - c*d with at most 2 ulp error regardless of cancellation (Kahan).
inline double diff_of_products(double a, double b, double c, double d) {
  const double w = c * d;
  const double e = std::fma(c, d, -w);
  const double f = std::fma(a, b, -w);
  return f - e;
}

// a*b + c*d with the same guarantee.
inline double sum_of_products(double a, double b, double c, double d) {
  return diff_of_products(a, b, -c, d);
}

// a1*b1 + a2*b2 + a3*b3 with compensated products and summation; the error is
// a few ulp of the exact result even under heavy cancellation.
inline double sum_of_3_products(double a1, double b1, double a2, double b2,
                                double a3, double b3) {
  double s = 0.0, comp = 0.0;
  const double as[3] = {a1, a2, a3};
  const double bs[3] = {b1, b2, b3};
  for (int i = 0; i < 3; ++i) {
    const double p = as[i] * bs[i];
    const double e = std::fma(as[i], bs[i], -p);
    const double t = s + p;
    comp += std::fabs(s) >= std::fabs(p) ? (s - t) + p : (p - t) + s;
    comp += e;
    s = t;
  }
  return s + comp;
}

// c1*u + c2*v + c3*w with compensated products per component.
inline Vec3 linear_combination(double c1, const Vec3& u, double c2, const Vec3& v,
                               double c3, const Vec3& w) {
  return {sum_of_3_products(c1, u.x, c2, v.x, c3, w.x),
          sum_of_3_products(c1, u.y, c2, v.y, c3, w.y),
          sum_of_3_products(c1, u.z, c2, v.z, c3, w.z)};
}

// Determinant of the 3x3 matrix with columns a, b, c.  Shared by both
// geometries; its sign carries the triangle orientation.  Products and partial
// sums are compensated: hyperboloid coordinates grow like cosh(theta), so the
// six terms can be ~1e5 while the determinant stays below 1.
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  double s = 0.0, comp = 0.0;
  auto add = [&s, &comp](double x, double y, double z, double sign) {
    const double p = y * z;
    const double e = std::fma(y, z, -p);
    const double r = x * p;
    const double q = sign * r;
    const double f = sign * std::fma(x, p, -r);
    const double t = s + q;
    comp += std::fabs(s) >= std::fabs(q) ? (s - t) + q : (q - t) + s;
    comp += f + sign * (x * e);
    s = t;
  };
  add(a.x, b.y, c.z, +1.0);
  add(a.x, b.z, c.y, -1.0);
  add(b.x, a.y, c.z, -1.0);
  add(b.x, a.z, c.y, +1.0);
  add(c.x, a.y, b.z, +1.0);
  add(c.x, a.z, b.y, -1.0);
  return s + comp;
}

inline double norm_e(const Vec3& a) { return std::sqrt(dot_e(a, a)); }

inline Vec3 normalized_e(const Vec3& a) {
  const double n = norm_e(a);
  return {a.x / n, a.y / n, a.z / n};
}

inline bool all_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

}  // namespace geodtri
