#pragma once

#include <cstdint>

#include "geodtri/area.hpp"
#include "geodtri/hyperbolic.hpp"
#include "geodtri/sphere.hpp"

namespace geodtri {

// SplitMix64.  state advances by the golden-gamma increment; each output is
// the finalizer of the advanced state.  The stream is bit-exact across
// platforms: only 64-bit integer arithmetic modulo 2^64 is involved.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Independent value-state stream for one triangle index:
// SplitMix64 seeded with seed XOR 0xD1342543DE82EF95 * (index + 1).  Streams
// for distinct indices never share state, so batches may be generated in any
// order or in parallel with identical results.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64{seed ^ (0xD1342543DE82EF95ULL * (index + 1))};
}

// Configuration for the deterministic triangle generator.
//   margin: sphere only; resample until every pairwise corner dot_e lies in
//     (-1 + margin, 1 - margin) and every pairwise midpoint inner product of
//     the minor-arc midpoints exceeds margin in absolute value.
//   theta_max: hyperbolic only; radial coordinate is uniform in [0, theta_max].
struct GeneratorConfig {
  std::uint64_t seed = 0;
  Geometry geometry = Geometry::sphere;
  double margin = 1e-5;
  double theta_max = 5.0;
};

// Corner draw order per attempt, consuming two uniforms per corner in corner
// order a, b, c:
//   sphere: h = 2u1 - 1, phi = 2*pi*u2 - pi, w = sqrt(1-h^2) e^{i phi};
//   hyperbolic: theta = theta_max*u1, phi = 2*pi*u2 - pi.
// A rejected sphere attempt draws six fresh uniforms from the same stream.
sphere::Triangle random_sphere_triangle(const GeneratorConfig& cfg, std::uint64_t index = 0);

hyp::Triangle random_hyp_triangle(const GeneratorConfig& cfg, std::uint64_t index = 0);

}  // namespace geodtri
