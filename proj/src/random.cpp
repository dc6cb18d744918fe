#include "geodtri/random.hpp"

#include <cmath>

#include "geodtri/error.hpp"

namespace geodtri {

namespace {

Vec3 draw_sphere_point(SplitMix64& rng) {
  const double h = 2.0 * rng.next_unit() - 1.0;
  const double phi = 2.0 * kPi * rng.next_unit() - kPi;
  const double r = std::sqrt(std::max(0.0, 1.0 - h * h));
  return {r * std::cos(phi), r * std::sin(phi), h};
}

Vec3 draw_hyp_point(SplitMix64& rng, double theta_max) {
  const double theta = theta_max * rng.next_unit();
  const double phi = 2.0 * kPi * rng.next_unit() - kPi;
  const double s = std::sinh(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cosh(theta)};
}

bool sphere_margins_ok(const Vec3& a, const Vec3& b, const Vec3& c, double margin) {
  const double d[3] = {dot_e(a, b), dot_e(b, c), dot_e(c, a)};
  for (double v : d) {
    if (v <= -1.0 + margin || v >= 1.0 - margin) return false;
  }
  const Vec3 alpha = normalized_e(b + c);
  const Vec3 beta = normalized_e(c + a);
  const Vec3 gamma = normalized_e(a + b);
  const double p[3] = {dot_e(alpha, beta), dot_e(beta, gamma), dot_e(gamma, alpha)};
  for (double v : p) {
    if (std::fabs(v) < margin) return false;
  }
  return true;
}

void check_config(const GeneratorConfig& cfg) {
  if (!(cfg.margin >= 0.0) || !(cfg.margin < 1.0) || !(cfg.theta_max > 0.0) ||
      !std::isfinite(cfg.theta_max)) {
    throw_error(errc::invalid_argument, "invalid generator configuration");
  }
}

}  // namespace

sphere::Triangle random_sphere_triangle(const GeneratorConfig& cfg, std::uint64_t index) {
  check_config(cfg);
  SplitMix64 rng = stream_for(cfg.seed, index);
  for (;;) {
    const Vec3 a = draw_sphere_point(rng);
    const Vec3 b = draw_sphere_point(rng);
    const Vec3 c = draw_sphere_point(rng);
    if (!sphere_margins_ok(a, b, c, cfg.margin)) continue;
    return {sphere::Point::normalized(a), sphere::Point::normalized(b),
            sphere::Point::normalized(c), std::nullopt};
  }
}

hyp::Triangle random_hyp_triangle(const GeneratorConfig& cfg, std::uint64_t index) {
  check_config(cfg);
  SplitMix64 rng = stream_for(cfg.seed, index);
  const Vec3 a = draw_hyp_point(rng, cfg.theta_max);
  const Vec3 b = draw_hyp_point(rng, cfg.theta_max);
  const Vec3 c = draw_hyp_point(rng, cfg.theta_max);
  return {hyp::Point::normalized(a), hyp::Point::normalized(b),
          hyp::Point::normalized(c)};
}

}  // namespace geodtri
