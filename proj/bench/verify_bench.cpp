// Benchmark of the batch verification drivers: the OpenMP kernels against the
// serial reference, asserting bit-identical reports.  Usage:
//   verify_bench [count] [seed]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "geodtri/verify.hpp"

namespace {

using geodtri::GeneratorConfig;
using geodtri::Geometry;
namespace verify = geodtri::verify;

double time_run(const GeneratorConfig& gen, verify::VerifyOptions opts, bool parallel,
                verify::VerifyReport& report) {
  opts.parallel = parallel;
  const auto start = std::chrono::steady_clock::now();
  report = verify::run_suite(gen, opts);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

bool identical(const verify::VerifyReport& a, const verify::VerifyReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    if (a.checks[i].name != b.checks[i].name ||
        a.checks[i].max_dev != b.checks[i].max_dev ||
        a.checks[i].worst_index != b.checks[i].worst_index) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t count = 20000;
  std::uint64_t seed = 42;
  if (argc > 1) count = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) seed = std::strtoull(argv[2], nullptr, 10);

  std::printf("openmp compiled in: %s\n", verify::parallel_available() ? "yes" : "no");
  std::printf("%-11s %-12s %9s %10s %10s %8s %9s %s\n", "geometry", "checks", "count",
              "serial_s", "openmp_s", "speedup", "identical", "pass");

  bool ok = true;
  for (const Geometry geometry : {Geometry::sphere, Geometry::hyperbolic}) {
    for (const bool with_oracles : {false, true}) {
      GeneratorConfig gen;
      gen.seed = seed;
      gen.geometry = geometry;
      verify::VerifyOptions opts;
      // The oracle cross-checks are much slower per sample; shrink the batch.
      opts.count = with_oracles ? count / 10 + 1 : count;
      opts.with_oracles = with_oracles;

      verify::VerifyReport serial, parallel;
      const double ts = time_run(gen, opts, false, serial);
      const double tp = time_run(gen, opts, true, parallel);
      const bool same = identical(serial, parallel);
      ok = ok && same && serial.pass && parallel.pass;
      std::printf("%-11s %-12s %9llu %10.3f %10.3f %7.2fx %9s %s\n",
                  geodtri::geometry_name(geometry),
                  with_oracles ? "with-oracles" : "closed-form",
                  static_cast<unsigned long long>(opts.count), ts, tp,
                  tp > 0.0 ? ts / tp : 0.0, same ? "yes" : "NO",
                  serial.pass && parallel.pass ? "yes" : "NO");
    }
  }
  return ok ? 0 : 1;
}
