#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodtri/area.hpp"
#include "geodtri/random.hpp"

namespace geodtri::verify {

// Batch self-check over seeded random triangles.  Every sample is produced by
// a per-index generator stream, so the suite is deterministic for a given
// (seed, count) pair and independent of the execution order; the parallel and
// serial drivers must report identical statistics bit for bit.

struct VerifyOptions {
  std::uint64_t count = 1000;
  bool parallel = true;      // use the OpenMP driver when available
  bool with_oracles = true;  // include the slow excess/quadrature cross-checks
  double quadrature_tol = 1e-8;
  double zero_tol = kZeroTol;
};

struct CheckStat {
  std::string name;
  double tol = 0.0;
  double max_dev = 0.0;         // worst deviation over all samples
  std::uint64_t worst_index = 0;  // sample index attaining max_dev
  bool pass = false;
};

struct VerifyReport {
  Geometry geometry = Geometry::sphere;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  bool parallel = false;  // whether the OpenMP driver actually ran
  std::vector<CheckStat> checks;
  bool pass = false;
};

// Sphere suite.  Checks, with tolerances in parentheses:
//   eq0_sin          |sin(Omega/2) - sine_half_area|          (1e-10)
//   eq0_det          |sine_half_area - det3(midpoints)|       (1e-10)
//   area_consistency area_from_midpoints vs triangle_area,
//                    mod 4*pi                                  (1e-10)
//   roundtrip        reconstruct(midpoints_of(t)) vs t, max
//                    corner coordinate deviation               (1e-9)
//   method_agreement reflection reconstruction vs closed form  (1e-9)
//   complement       Omega - Omega_flagged - 2*pi mod 4*pi     (1e-9)
//   excess           angle-excess oracle vs Omega              (1e-8)
//   quadrature       adaptive quadrature oracle vs Omega       (1e-6)
// Odd sample indices round-trip with side (i/2) mod 3 flagged major.
VerifyReport run_sphere_suite(const GeneratorConfig& gen, const VerifyOptions& opts);

// Hyperbolic suite.  eq0_sin, eq0_det, area_consistency, roundtrip, excess
// and quadrature as above, plus the range invariants
//   omega_range      |Omega| < pi
//   det_range        |det3(midpoints)| < 1
VerifyReport run_hyperbolic_suite(const GeneratorConfig& gen, const VerifyOptions& opts);

VerifyReport run_suite(const GeneratorConfig& gen, const VerifyOptions& opts);

// True when the binary was built with OpenMP support.
bool parallel_available();

}  // namespace geodtri::verify
