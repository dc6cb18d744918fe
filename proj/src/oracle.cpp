#include "geodtri/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "geodtri/error.hpp"
#include "geodtri/rotation.hpp"

namespace geodtri::oracle {

namespace {

constexpr double kDegenerateTol = 1e-12;

// Interior angle at p between the geodesics toward q and r, from the tangent
// projections q - <p,q>p and r - <p,r>p in the geometry's product.  The
// half-angle atan2 form stays accurate for angles near 0 and pi, where the
// arccos of the normalized product loses most of its digits.
double sphere_angle(const Vec3& p, const Vec3& q, const Vec3& r) {
  const Vec3 tq = q - dot_e(p, q) * p;
  const Vec3 tr = r - dot_e(p, r) * p;
  const double nq = norm_e(tq);
  const double nr = norm_e(tr);
  if (nq < kDegenerateTol || nr < kDegenerateTol) {
    throw_error(errc::degenerate_triangle, "side tangent vanishes at a corner");
  }
  const Vec3 uq = (1.0 / nq) * tq;
  const Vec3 ur = (1.0 / nr) * tr;
  return 2.0 * std::atan2(norm_e(uq - ur), norm_e(uq + ur));
}

// On the hyperboloid the induced metric on tangent vectors is the negated
// Lorentz product.
double hyp_angle(const Vec3& p, const Vec3& q, const Vec3& r) {
  const Vec3 tq = q - dot_l(p, q) * p;
  const Vec3 tr = r - dot_l(p, r) * p;
  const double nq2 = -dot_l(tq, tq);
  const double nr2 = -dot_l(tr, tr);
  if (nq2 < kDegenerateTol * kDegenerateTol || nr2 < kDegenerateTol * kDegenerateTol) {
    throw_error(errc::degenerate_triangle, "side tangent vanishes at a corner");
  }
  const Vec3 uq = (1.0 / std::sqrt(nq2)) * tq;
  const Vec3 ur = (1.0 / std::sqrt(nr2)) * tr;
  const double nd2 = -dot_l(uq - ur, uq - ur);
  const double ns2 = -dot_l(uq + ur, uq + ur);
  return 2.0 * std::atan2(std::sqrt(std::max(0.0, nd2)), std::sqrt(std::max(0.0, ns2)));
}

// Adaptive Simpson with the standard 15*eps acceptance rule.  Evaluation
// budget is shared across the whole object, so piecewise calls draw from one
// pool.  The first kMinDepth levels subdivide unconditionally: the 15*eps
// rule trusts the Richardson error model, and on wide panels the estimate
// can cross zero long before the asymptotic regime is reached.  At maximal
// depth the interval is ~2^-50 of the span; for the bounded integrands used
// here the discarded error is below every supported tolerance, so the
// estimate is accepted rather than refined further against evaluation noise.
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(std::function<double(double)> f, int max_evals)
      : f_(std::move(f)), budget_(max_evals) {}

  double integrate(double a, double b, double eps) {
    const double fa = eval(a);
    const double fb = eval(b);
    const double m = 0.5 * (a + b);
    const double fm = eval(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return recurse(a, b, fa, fb, fm, whole, eps, kMaxDepth);
  }

 private:
  static constexpr int kMaxDepth = 50;
  static constexpr int kMinDepth = 8;

  double eval(double x) {
    if (--budget_ < 0) {
      throw_error(errc::quadrature_failure, "quadrature evaluation budget exhausted");
    }
    return f_(x);
  }

  double recurse(double a, double b, double fa, double fb, double fm, double whole,
                 double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const bool settled = depth <= kMaxDepth - kMinDepth;
    if (depth <= 0 || (settled && std::fabs(delta) <= 15.0 * eps)) {
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, fm, flm, left, 0.5 * eps, depth - 1) +
           recurse(m, b, fm, fb, frm, right, 0.5 * eps, depth - 1);
  }

  std::function<double(double)> f_;
  int budget_;
};

struct ChordSetup {
  double coeff_sin = 0.0;  // A in cot(theta(phi)) = A sin(phi) + B cos(phi)
  double coeff_cos = 0.0;
  double phi_start = 0.0;
  double span = 0.0;  // signed azimuth difference in (-pi, pi)
};

// Shared setup for both quadrature oracles: corner a has been moved to the
// pole, bp and cp are the transformed b and c, cot_b/cot_c carry cot or coth
// of their radial coordinates.
ChordSetup chord_setup(const Vec3& bp, const Vec3& cp, double cot_b, double cot_c) {
  const double phi_b = std::atan2(bp.y, bp.x);
  const double phi_c = std::atan2(cp.y, cp.x);
  const double span = std::remainder(phi_c - phi_b, 2.0 * kPi);
  const double s = std::sin(span);
  if (std::fabs(s) < kDegenerateTol) {
    throw_error(errc::degenerate_triangle, "corners are collinear with the pole");
  }
  ChordSetup cs;
  cs.coeff_sin = (cot_c * std::cos(phi_b) - cot_b * std::cos(phi_c)) / s;
  cs.coeff_cos = (cot_b * std::sin(phi_c) - cot_c * std::sin(phi_b)) / s;
  cs.phi_start = phi_b;
  cs.span = span;
  return cs;
}

double signed_by_det(double magnitude, double det) {
  return det >= 0.0 ? magnitude : -magnitude;
}

}  // namespace

double planar_area(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
  return 0.5 * ((b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u));
}

double planar_area_from_midpoints(const PlanarPoint& alpha, const PlanarPoint& beta,
                                  const PlanarPoint& gamma) {
  return 2.0 * ((beta.u - alpha.u) * (gamma.v - alpha.v) -
                (beta.v - alpha.v) * (gamma.u - alpha.u));
}

double excess_area(const sphere::Point& a, const sphere::Point& b,
                   const sphere::Point& c) {
  const Vec3& va = a.ambient();
  const Vec3& vb = b.ambient();
  const Vec3& vc = c.ambient();
  if (norm_e(va - vb) < kDegenerateTol || norm_e(vb - vc) < kDegenerateTol ||
      norm_e(vc - va) < kDegenerateTol) {
    throw_error(errc::degenerate_triangle, "coincident corners");
  }
  const double sum = sphere_angle(va, vb, vc) + sphere_angle(vb, vc, va) +
                     sphere_angle(vc, va, vb);
  return signed_by_det(sum - kPi, det3(va, vb, vc));
}

double excess_area(const hyp::Point& a, const hyp::Point& b, const hyp::Point& c) {
  const Vec3& va = a.ambient();
  const Vec3& vb = b.ambient();
  const Vec3& vc = c.ambient();
  if (dot_l(va, vb) - 1.0 < kDegenerateTol || dot_l(vb, vc) - 1.0 < kDegenerateTol ||
      dot_l(vc, va) - 1.0 < kDegenerateTol) {
    throw_error(errc::degenerate_triangle, "coincident corners");
  }
  const double sum = hyp_angle(va, vb, vc) + hyp_angle(vb, vc, va) +
                     hyp_angle(vc, va, vb);
  return signed_by_det(kPi - sum, det3(va, vb, vc));
}

double quadrature_area(const sphere::Point& a, const sphere::Point& b,
                       const sphere::Point& c, double tol, int max_evals) {
  const Rotation r = rotate_to_north(a.ambient());
  const Vec3 bp = r.apply(b.ambient());
  const Vec3 cp = r.apply(c.ambient());
  const double rho_b = std::hypot(bp.x, bp.y);
  const double rho_c = std::hypot(cp.x, cp.y);
  if (rho_b < kDegenerateTol || rho_c < kDegenerateTol) {
    throw_error(errc::degenerate_triangle, "corner coincides with or opposes the pole");
  }
  const ChordSetup cs = chord_setup(bp, cp, bp.z / rho_b, cp.z / rho_c);
  AdaptiveSimpson quad(
      [&cs](double phi) {
        const double t = cs.coeff_sin * std::sin(phi) + cs.coeff_cos * std::cos(phi);
        // Radial integral of sin(theta) from 0 to theta(phi) with
        // cot(theta(phi)) = t and theta in (0, pi).
        return 1.0 - t / std::sqrt(1.0 + t * t);
      },
      max_evals);
  // When the chord passes near the pole or its antipode the integrand turns
  // over within an azimuth window of order 1/|t|, which can hide between
  // stencil samples.  Those windows are centered on the extrema of t, so the
  // panels are cut there and the features sit on panel endpoints.
  const double phi_peak = std::atan2(cs.coeff_sin, cs.coeff_cos);
  const double lo = std::min(cs.phi_start, cs.phi_start + cs.span);
  const double hi = std::max(cs.phi_start, cs.phi_start + cs.span);
  double cuts[2];
  int ncuts = 0;
  for (int k = -2; k <= 2 && ncuts < 2; ++k) {
    const double phi = phi_peak + k * kPi;
    if (phi > lo + kDegenerateTol && phi < hi - kDegenerateTol) {
      cuts[ncuts++] = phi;
    }
  }
  double integral = 0.0;
  double prev = lo;
  for (int i = 0; i < ncuts; ++i) {
    integral += quad.integrate(prev, cuts[i], tol);
    prev = cuts[i];
  }
  integral += quad.integrate(prev, hi, tol);
  return signed_by_det(std::fabs(integral), det3(a.ambient(), b.ambient(), c.ambient()));
}

double quadrature_area(const hyp::Point& a, const hyp::Point& b, const hyp::Point& c,
                       double tol, int max_evals) {
  const LorentzMap boost = boost_to_north(a.ambient());
  const Vec3 bp = boost.apply(b.ambient());
  const Vec3 cp = boost.apply(c.ambient());
  const double cosh_len = dot_l(bp, cp);
  if (cosh_len - 1.0 < kDegenerateTol) {
    throw_error(errc::degenerate_triangle, "chord corners coincide");
  }
  const double len = std::acosh(cosh_len);
  const double sinh_len = std::sqrt((cosh_len - 1.0) * (cosh_len + 1.0));
  const Vec3 tangent = (1.0 / sinh_len) * (cp - cosh_len * bp);
  // Fan area swept from the pole over the unit-speed chord
  // X(s) = cosh(s) bp + sinh(s) tangent.  In polar coordinates the sector
  // element is (cosh(theta) - 1) dphi, which along the chord reduces to
  // (x y' - y x') / (1 + z) ds: bounded by 1 and smooth even when the chord
  // runs far from the pole, unlike the phi parametrization.
  AdaptiveSimpson quad(
      [&bp, &tangent](double s) {
        const double ch = std::cosh(s);
        const double sh = std::sinh(s);
        const Vec3 x = ch * bp + sh * tangent;
        const Vec3 v = sh * bp + ch * tangent;
        return diff_of_products(x.x, v.y, x.y, v.x) / (1.0 + x.z);
      },
      max_evals);
  const double integral = quad.integrate(0.0, len, tol);
  return signed_by_det(std::fabs(integral), det3(a.ambient(), b.ambient(), c.ambient()));
}

}  // namespace geodtri::oracle
