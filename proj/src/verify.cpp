#include "geodtri/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "geodtri/error.hpp"
#include "geodtri/oracle.hpp"

namespace geodtri::verify {

namespace {

// Deviation reported for a sample whose kernel threw or produced a non-finite
// value; large enough to fail every check yet still a normal double.
constexpr double kFailureDev = 1e300;

struct Extreme {
  double dev = -1.0;
  std::uint64_t index = 0;

  // Larger deviation wins; ties resolve to the smaller index, which makes the
  // reduction independent of evaluation order.
  void absorb(double d, std::uint64_t i) {
    if (d > dev || (d == dev && i < index)) {
      dev = d;
      index = i;
    }
  }

  void merge(const Extreme& o) { absorb(o.dev, o.index); }
};

template <class Kernel>
std::vector<Extreme> scan(std::uint64_t count, int nchecks, bool want_parallel,
                          bool& used_parallel, const Kernel& kernel) {
  used_parallel = false;
  std::vector<Extreme> global(nchecks);
#ifdef _OPENMP
  if (want_parallel) {
    used_parallel = true;
#pragma omp parallel
    {
      std::vector<Extreme> local(nchecks);
      std::vector<double> devs(nchecks);
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < static_cast<long long>(count); ++i) {
        kernel(static_cast<std::uint64_t>(i), devs.data());
        for (int k = 0; k < nchecks; ++k) {
          const double d = std::isfinite(devs[k]) ? devs[k] : kFailureDev;
          local[k].absorb(d, static_cast<std::uint64_t>(i));
        }
      }
#pragma omp critical
      for (int k = 0; k < nchecks; ++k) global[k].merge(local[k]);
    }
    return global;
  }
#endif
  std::vector<double> devs(nchecks);
  for (std::uint64_t i = 0; i < count; ++i) {
    kernel(i, devs.data());
    for (int k = 0; k < nchecks; ++k) {
      const double d = std::isfinite(devs[k]) ? devs[k] : kFailureDev;
      global[k].absorb(d, i);
    }
  }
  return global;
}

struct CheckSpec {
  const char* name;
  double tol;
};

VerifyReport assemble(Geometry geometry, const GeneratorConfig& gen,
                      const VerifyOptions& opts, const CheckSpec* specs, int nchecks,
                      const std::vector<Extreme>& extremes, bool used_parallel) {
  VerifyReport report;
  report.geometry = geometry;
  report.seed = gen.seed;
  report.count = opts.count;
  report.parallel = used_parallel;
  report.pass = true;
  for (int k = 0; k < nchecks; ++k) {
    CheckStat stat;
    stat.name = specs[k].name;
    stat.tol = specs[k].tol;
    stat.max_dev = std::max(0.0, extremes[k].dev);
    stat.worst_index = extremes[k].index;
    stat.pass = stat.max_dev < stat.tol;
    report.pass = report.pass && stat.pass;
    report.checks.push_back(std::move(stat));
  }
  return report;
}

double corner_distance(const Vec3& p, const Vec3& q) {
  return std::max({std::fabs(p.x - q.x), std::fabs(p.y - q.y), std::fabs(p.z - q.z)});
}

double triangle_distance(const sphere::Triangle& s, const sphere::Triangle& t) {
  const double dev = std::max({corner_distance(s.a.ambient(), t.a.ambient()),
                               corner_distance(s.b.ambient(), t.b.ambient()),
                               corner_distance(s.c.ambient(), t.c.ambient())});
  return s.major_arc == t.major_arc ? dev : kFailureDev;
}

double triangle_distance(const hyp::Triangle& s, const hyp::Triangle& t) {
  return std::max({corner_distance(s.a.ambient(), t.a.ambient()),
                   corner_distance(s.b.ambient(), t.b.ambient()),
                   corner_distance(s.c.ambient(), t.c.ambient())});
}

constexpr CheckSpec kSphereChecks[] = {
    {"eq0_sin", 1e-10},   {"eq0_det", 1e-10},    {"area_consistency", 1e-10},
    {"roundtrip", 1e-9},  {"method_agreement", 1e-9}, {"complement", 1e-9},
    {"excess", 1e-8},     {"quadrature", 1e-6},
};

constexpr CheckSpec kHypChecks[] = {
    {"eq0_sin", 1e-10},  {"eq0_det", 1e-10}, {"area_consistency", 1e-10},
    {"roundtrip", 1e-9}, {"omega_range", kPi}, {"det_range", 1.0},
    {"excess", 1e-8},    {"quadrature", 1e-6},
};

void validate(const VerifyOptions& opts) {
  if (opts.count == 0) {
    throw_error(errc::invalid_argument, "verification sample count must be positive");
  }
}

}  // namespace

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

VerifyReport run_sphere_suite(const GeneratorConfig& gen, const VerifyOptions& opts) {
  validate(opts);
  const int nchecks = opts.with_oracles ? 8 : 6;
  auto kernel = [&gen, &opts, nchecks](std::uint64_t i, double* dev) {
    std::fill(dev, dev + nchecks, 0.0);
    try {
      const sphere::Triangle base = random_sphere_triangle(gen, i);
      const double omega = sphere::area_from_corners(base.a, base.b, base.c).value;
      const double shalf = sphere::sine_half_area(base.a, base.b, base.c);
      const sphere::Midpoints mb = sphere::midpoints_of(base);
      const double d =
          det3(mb.alpha.ambient(), mb.beta.ambient(), mb.gamma.ambient());
      dev[0] = std::fabs(std::sin(0.5 * omega) - shalf);
      dev[1] = std::fabs(shalf - d);

      // Odd indices exercise the flagged variant of the same triangle.
      sphere::Triangle t = base;
      if (i % 2 == 1) t.major_arc = static_cast<sphere::Side>((i / 2) % 3);
      const sphere::Midpoints m = sphere::midpoints_of(t);
      const double target = sphere::triangle_area(t).value;
      dev[2] = mod_4pi_distance(sphere::area_from_midpoints(m, opts.zero_tol).value,
                                target);
      const sphere::Triangle r1 = sphere::reconstruct(m, opts.zero_tol);
      const sphere::Triangle r2 = sphere::reconstruct_closed_form(m, opts.zero_tol);
      dev[3] = triangle_distance(r1, t);
      dev[4] = triangle_distance(r1, r2);

      // Flagging one side replaces the triangle by its hemisphere complement
      // traversed with the opposite orientation: Omega - Omega_flag = 2*pi
      // modulo 4*pi, independent of which side is flagged.
      sphere::Triangle tf = base;
      tf.major_arc = static_cast<sphere::Side>(i % 3);
      const double omega_flag = sphere::triangle_area(tf).value;
      dev[5] = std::fabs(canonical_mod_4pi(omega - omega_flag - 2.0 * kPi));

      if (nchecks > 6) {
        dev[6] = std::fabs(oracle::excess_area(base.a, base.b, base.c) - omega);
        dev[7] = std::fabs(
            oracle::quadrature_area(base.a, base.b, base.c, opts.quadrature_tol) -
            omega);
      }
    } catch (const GeoError&) {
      std::fill(dev, dev + nchecks, kFailureDev);
    }
  };
  bool used_parallel = false;
  const auto extremes = scan(opts.count, nchecks, opts.parallel, used_parallel, kernel);
  return assemble(Geometry::sphere, gen, opts, kSphereChecks, nchecks, extremes,
                  used_parallel);
}

VerifyReport run_hyperbolic_suite(const GeneratorConfig& gen, const VerifyOptions& opts) {
  validate(opts);
  const int nchecks = opts.with_oracles ? 8 : 6;
  auto kernel = [&gen, &opts, nchecks](std::uint64_t i, double* dev) {
    std::fill(dev, dev + nchecks, 0.0);
    try {
      const hyp::Triangle t = random_hyp_triangle(gen, i);
      const double omega = hyp::area_from_corners(t.a, t.b, t.c).value;
      const double shalf = hyp::sine_half_area(t.a, t.b, t.c);
      const hyp::Midpoints m = hyp::midpoints_of(t);
      const double d = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
      dev[0] = std::fabs(std::sin(0.5 * omega) - shalf);
      dev[1] = std::fabs(shalf - d);
      dev[2] = mod_4pi_distance(hyp::area_from_midpoints(m).value, omega);
      dev[3] = triangle_distance(hyp::reconstruct(m), t);
      dev[4] = std::fabs(omega);
      dev[5] = std::fabs(d);
      if (nchecks > 6) {
        dev[6] = std::fabs(oracle::excess_area(t.a, t.b, t.c) - omega);
        dev[7] = std::fabs(
            oracle::quadrature_area(t.a, t.b, t.c, opts.quadrature_tol) - omega);
      }
    } catch (const GeoError&) {
      std::fill(dev, dev + nchecks, kFailureDev);
    }
  };
  bool used_parallel = false;
  const auto extremes = scan(opts.count, nchecks, opts.parallel, used_parallel, kernel);
  return assemble(Geometry::hyperbolic, gen, opts, kHypChecks, nchecks, extremes,
                  used_parallel);
}

VerifyReport run_suite(const GeneratorConfig& gen, const VerifyOptions& opts) {
  switch (gen.geometry) {
    case Geometry::sphere: return run_sphere_suite(gen, opts);
    case Geometry::hyperbolic: return run_hyperbolic_suite(gen, opts);
    default:
      throw_error(errc::invalid_argument, "no verification suite for this geometry");
  }
}

}  // namespace geodtri::verify
