// Acceptance suite: each numbered criterion prints one PASS/FAIL line and the
// process exits nonzero when any of them fails.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "geodtri/error.hpp"
#include "geodtri/hyperbolic.hpp"
#include "geodtri/oracle.hpp"
#include "geodtri/random.hpp"
#include "geodtri/sphere.hpp"
#include "geodtri/vec3.hpp"

using namespace geodtri;
using json = nlohmann::json;

namespace {

int g_failed = 0;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

void report(int num, const char* label, bool pass, const std::string& detail) {
  std::printf("%s  %d. %s (%s)\n", pass ? "PASS" : "FAIL", num, label, detail.c_str());
  if (!pass) ++g_failed;
}

sphere::Point spt(double x, double y, double z) {
  return sphere::Point::from_ambient({x, y, z});
}

hyp::Point hpt(double x, double y, double z) {
  return hyp::Point::from_ambient({x, y, z});
}

void criterion_1() {
  const sphere::Triangle t{spt(1, 0, 0), spt(0, 1, 0), spt(0, 0, 1), std::nullopt};
  const double rt = 1.0 / std::sqrt(2.0);

  const sphere::Midpoints m = sphere::midpoints_of(t);
  const double d = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
  const double sine = sphere::sine_half_area(t.a, t.b, t.c);

  double dev = std::fabs(sphere::triangle_area(t).value - kPi / 2);
  dev = std::max(dev, std::fabs(sphere::area_from_midpoints(m).value - kPi / 2));
  dev = std::max(dev, std::fabs(sine - rt));
  dev = std::max(dev, std::fabs(d - rt));
  dev = std::max(dev, std::fabs(sine - d));
  report(1, "octant closed forms", dev < 1e-12, "max dev " + sci(dev));
}

void criterion_2() {
  GeneratorConfig cfg;
  cfg.seed = 42;
  double dev_sin = 0.0, dev_det = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const sphere::Triangle t = random_sphere_triangle(cfg, i);
    const double omega = sphere::triangle_area(t).value;
    const double sine = sphere::sine_half_area(t.a, t.b, t.c);
    const sphere::Midpoints m = sphere::midpoints_of(t);
    const double d = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
    dev_sin = std::max(dev_sin, std::fabs(std::sin(omega / 2) - sine));
    dev_det = std::max(dev_det, std::fabs(sine - d));
  }
  report(2, "sphere identity suite, 1e5 triangles", dev_sin < 1e-10 && dev_det < 1e-10,
         "sin dev " + sci(dev_sin) + ", det dev " + sci(dev_det));
}

void criterion_3() {
  GeneratorConfig cfg;
  cfg.seed = 42;
  cfg.geometry = Geometry::hyperbolic;
  cfg.theta_max = 5.0;
  double dev_sin = 0.0, dev_det = 0.0, max_omega = 0.0, max_d = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const hyp::Triangle t = random_hyp_triangle(cfg, i);
    const double omega = hyp::area_from_corners(t.a, t.b, t.c).value;
    const double sine = hyp::sine_half_area(t.a, t.b, t.c);
    const hyp::Midpoints m = hyp::midpoints_of(t);
    const double d = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
    dev_sin = std::max(dev_sin, std::fabs(std::sin(omega / 2) - sine));
    dev_det = std::max(dev_det, std::fabs(sine - d));
    max_omega = std::max(max_omega, std::fabs(omega));
    max_d = std::max(max_d, std::fabs(d));
  }
  const bool pass =
      dev_sin < 1e-10 && dev_det < 1e-10 && max_omega < kPi && max_d < 1.0;
  report(3, "hyperbolic identity suite, 1e5 triangles", pass,
         "sin dev " + sci(dev_sin) + ", det dev " + sci(dev_det) + ", omega margin " +
             sci(kPi - max_omega) + ", det margin " + sci(1.0 - max_d));
}

void criterion_4() {
  GeneratorConfig cfg;
  cfg.seed = 42;
  double dev_round = 0.0, dev_agree = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    sphere::Triangle t = random_sphere_triangle(cfg, i);
    if (i % 2 == 1) t.major_arc = static_cast<sphere::Side>((i / 2) % 3);
    const sphere::Midpoints m = sphere::midpoints_of(t);
    const sphere::Triangle r = sphere::reconstruct(m);
    const sphere::Triangle r2 = sphere::reconstruct_closed_form(m);
    dev_round = std::max({dev_round, norm_e(r.a.ambient() - t.a.ambient()),
                          norm_e(r.b.ambient() - t.b.ambient()),
                          norm_e(r.c.ambient() - t.c.ambient())});
    dev_agree = std::max({dev_agree, norm_e(r.a.ambient() - r2.a.ambient()),
                          norm_e(r.b.ambient() - r2.b.ambient()),
                          norm_e(r.c.ambient() - r2.c.ambient())});
    if (r.major_arc != t.major_arc || r2.major_arc != t.major_arc) dev_round = 2.0;
  }

  GeneratorConfig hcfg;
  hcfg.seed = 42;
  hcfg.geometry = Geometry::hyperbolic;
  double dev_hyp = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const hyp::Triangle t = random_hyp_triangle(hcfg, i);
    const hyp::Triangle r = hyp::reconstruct(hyp::midpoints_of(t));
    dev_hyp = std::max({dev_hyp, norm_e(r.a.ambient() - t.a.ambient()),
                        norm_e(r.b.ambient() - t.b.ambient()),
                        norm_e(r.c.ambient() - t.c.ambient())});
  }
  const bool pass = dev_round < 1e-9 && dev_agree < 1e-9 && dev_hyp < 1e-9;
  report(4, "round-trip reconstruction, 1e5 per geometry", pass,
         "sphere " + sci(dev_round) + ", agreement " + sci(dev_agree) + ", hyperbolic " +
             sci(dev_hyp));
}

void criterion_5() {
  GeneratorConfig cfg;
  cfg.seed = 42;
  double dev_excess = 0.0, dev_quad = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const sphere::Triangle t = random_sphere_triangle(cfg, i);
    const double omega = sphere::area_from_corners(t.a, t.b, t.c).value;
    dev_excess = std::max(dev_excess, std::fabs(oracle::excess_area(t.a, t.b, t.c) - omega));
    dev_quad = std::max(dev_quad,
                        std::fabs(oracle::quadrature_area(t.a, t.b, t.c, 1e-8) - omega));
  }

  GeneratorConfig hcfg;
  hcfg.seed = 42;
  hcfg.geometry = Geometry::hyperbolic;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const hyp::Triangle t = random_hyp_triangle(hcfg, i);
    const double omega = hyp::area_from_corners(t.a, t.b, t.c).value;
    dev_excess = std::max(dev_excess, std::fabs(oracle::excess_area(t.a, t.b, t.c) - omega));
    dev_quad = std::max(dev_quad,
                        std::fabs(oracle::quadrature_area(t.a, t.b, t.c, 1e-8) - omega));
  }
  const bool pass = dev_excess < 1e-8 && dev_quad < 1e-6;
  report(5, "oracle agreement, 1e3 per geometry", pass,
         "excess " + sci(dev_excess) + ", quadrature " + sci(dev_quad));
}

void criterion_6() {
  std::string fail;
  auto expect_code = [&fail](const char* what, errc want, auto&& f) {
    try {
      f();
      if (fail.empty()) fail = std::string(what) + ": no error raised";
    } catch (const GeoError& e) {
      if (e.code() != want && fail.empty()) {
        fail = std::string(what) + ": got " + errc_name(e.code());
      }
    }
  };

  const sphere::Point e1 = spt(1, 0, 0), e2 = spt(0, 1, 0), e3 = spt(0, 0, 1);

  // Orthonormal frames: area is half the sphere, signed by the determinant;
  // reconstruction has a one-parameter family of preimages.
  const sphere::Midpoints pos{e1, e2, e3};
  const sphere::Midpoints neg{e2, e1, e3};
  if (std::fabs(sphere::area_from_midpoints(pos).value - kPi) > 1e-12) {
    fail = "orthonormal area != pi";
  }
  if (std::fabs(sphere::area_from_midpoints(neg).value + kPi) > 1e-12) {
    fail = "orthonormal area != -pi";
  }
  if (sphere::classify_midpoints(pos).kind != sphere::MidpointKind::orthonormal) {
    fail = "orthonormal triple misclassified";
  }
  expect_code("orthonormal reconstruct", errc::undetermined,
              [&] { sphere::reconstruct(pos); });

  // One-zero and two-zero triples are classified and rejected everywhere.
  const sphere::Midpoints one{e1, e2, sphere::Point::normalized({1, 1, 1})};
  const sphere::Midpoints two{e1, e2, sphere::Point::normalized({0, 1, 1})};
  if (sphere::classify_midpoints(one).kind != sphere::MidpointKind::one_zero) {
    fail = "one-zero triple misclassified";
  }
  if (sphere::classify_midpoints(two).kind != sphere::MidpointKind::two_zero) {
    fail = "two-zero triple misclassified";
  }
  for (const auto* m : {&one, &two}) {
    expect_code("singular area", errc::singular_midpoints,
                [&] { sphere::area_from_midpoints(*m); });
    expect_code("singular reconstruct", errc::singular_midpoints,
                [&] { sphere::reconstruct(*m); });
  }

  // Hyperbolic realizability: d = sinh(1)^2 > 1 has no preimage, and the
  // same family brackets the boundary d = 1.
  auto triple = [](double det) {
    const double t = std::asinh(std::sqrt(det));
    const double s = std::sinh(t), c = std::cosh(t);
    return hyp::Midpoints{hpt(0, 0, 1), hpt(s, 0, c), hpt(0, s, c)};
  };
  const double s1 = std::sinh(1.0);
  expect_code("sinh^2(1) area", errc::not_realizable,
              [&] { hyp::area_from_midpoints(triple(s1 * s1)); });
  expect_code("sinh^2(1) reconstruct", errc::not_realizable,
              [&] { hyp::reconstruct(triple(s1 * s1)); });
  expect_code("det 1+1e-3", errc::not_realizable,
              [&] { hyp::area_from_midpoints(triple(1.0 + 1e-3)); });
  try {
    (void)hyp::area_from_midpoints(triple(1.0 - 1e-3));
    (void)hyp::reconstruct(triple(1.0 - 1e-3));
  } catch (const GeoError& e) {
    if (fail.empty()) fail = std::string("det 1-1e-3 rejected: ") + errc_name(e.code());
  }

  report(6, "singular-case suite", fail.empty(), fail.empty() ? "all cases" : fail);
}

void criterion_7() {
  GeneratorConfig cfg;
  cfg.seed = 42;
  double dev = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const sphere::Triangle t = random_sphere_triangle(cfg, i);
    sphere::Triangle flagged = t;
    flagged.major_arc = static_cast<sphere::Side>(i % 3);
    const double omega = sphere::triangle_area(t).value;
    const double omega_flag = sphere::triangle_area(flagged).value;
    // Omega' = -Omega_flag, so Omega + Omega' = 2*pi mod 4*pi.
    dev = std::max(dev, mod_4pi_distance(omega - omega_flag, 2.0 * kPi));
  }
  report(7, "hemisphere complement, 1e2 triangles", dev < 1e-9, "max dev " + sci(dev));
}

void criterion_8() {
  const double radius = 1e-3;
  double worst = 0.0;

  for (int geom = 0; geom < 2; ++geom) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      SplitMix64 rng = stream_for(42 + geom, i);
      oracle::PlanarPoint p[3];
      for (auto& q : p) {
        const double r = radius * std::sqrt(rng.next_unit());
        const double ang = 2.0 * kPi * rng.next_unit() - kPi;
        q = {r * std::cos(ang), r * std::sin(ang)};
      }
      const double planar = oracle::planar_area(p[0], p[1], p[2]);
      double curved = 0.0;
      if (geom == 0) {
        // Central projection: the planar coordinates are a gnomonic chart, so
        // the planar sides lift to geodesics.
        const auto a = sphere::Point::normalized({p[0].u, p[0].v, 1});
        const auto b = sphere::Point::normalized({p[1].u, p[1].v, 1});
        const auto c = sphere::Point::normalized({p[2].u, p[2].v, 1});
        curved = sphere::area_from_corners(a, b, c).value;
      } else {
        // Klein chart: same property on the hyperboloid.
        const auto a = hyp::Point::normalized({p[0].u, p[0].v, 1});
        const auto b = hyp::Point::normalized({p[1].u, p[1].v, 1});
        const auto c = hyp::Point::normalized({p[2].u, p[2].v, 1});
        curved = hyp::area_from_corners(a, b, c).value;
      }
      worst = std::max(worst, std::fabs(curved - planar) / std::fabs(planar));
    }
  }
  report(8, "planar limit, caps of radius 1e-3", worst < 1e-5,
         "max relative dev " + sci(worst));
}

// One CLI transcript: run the request twice, demand byte-identical output and
// the expected exit code, and hand the parsed document to the check.
struct Transcript {
  const char* name;
  const char* sub;
  std::string request;
  int want_code;
  bool (*check)(const json&);
};

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& cli, const char* sub, const std::string& request) {
  static int counter = 0;
  const std::string path = "/tmp/geodtri_acc_" + std::to_string(::getpid()) + "_" +
                           std::to_string(counter++) + ".json";
  std::ofstream(path) << request;
  const std::string cmd =
      "\"" + cli + "\" " + sub + " --file " + path + " 2>/dev/null";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int rc = ::pclose(pipe);
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::remove(path.c_str());
  return r;
}

void criterion_9(const std::string& cli) {
  const double rt2 = 1.0 / std::sqrt(2.0);
  const double rt3 = std::sqrt(3.0);
  const double s10 = std::sqrt(10.0), s6 = std::sqrt(6.0);

  auto doc = [](const char* geometry, const char* kind, const Vec3& a, const Vec3& b,
                const Vec3& c) {
    json j;
    j["geometry"] = geometry;
    j[kind] = {{a.x, a.y, a.z}, {b.x, b.y, b.z}, {c.x, c.y, c.z}};
    return j.dump();
  };

  const Transcript transcripts[] = {
      {"area octant", "area", doc("sphere", "corners", {1, 0, 0}, {0, 1, 0}, {0, 0, 1}),
       0, [](const json& j) { return j["area"].get<double>() == kPi / 2; }},
      {"area orthonormal", "area",
       doc("sphere", "midpoints", {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), 0,
       [](const json& j) {
         return j["area"].get<double>() == kPi && j["class"] == "orthonormal";
       }},
      {"area unrealizable", "area",
       doc("hyperbolic", "midpoints", {0, 0, 1}, {std::sinh(1.0), 0, std::cosh(1.0)},
           {0, std::sinh(1.0), std::cosh(1.0)}),
       3, [](const json& j) { return j["status"] == "not_realizable"; }},
      {"midpoints octant", "midpoints",
       doc("sphere", "corners", {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), 0,
       [](const json& j) {
         const double h = 1.0 / std::sqrt(2.0);
         return j["midpoints"][0][1].get<double>() == h &&
                j["midpoints"][2][2].get<double>() == 0.0;
       }},
      {"midpoints hyperbolic", "midpoints",
       doc("hyperbolic", "corners", {0, 0, 1}, {std::sqrt(3.0), 0, 2},
           {0, std::sqrt(3.0), 2}),
       0,
       [](const json& j) {
         const double want = 4.0 / std::sqrt(10.0);
         return std::fabs(j["midpoints"][0][2].get<double>() - want) < 1e-15;
       }},
      {"midpoints antipodal", "midpoints",
       doc("sphere", "corners", {1, 0, 0}, {-1, 0, 0}, {0, 0, 1}), 3,
       [](const json& j) { return j["error"] == "antipodal_pair"; }},
      {"reconstruct octant", "reconstruct",
       doc("sphere", "midpoints", {0, rt2, rt2}, {rt2, 0, rt2}, {rt2, rt2, 0}), 0,
       [](const json& j) { return j["residual"].get<double>() < 1e-12; }},
      {"reconstruct orthonormal", "reconstruct",
       doc("sphere", "midpoints", {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), 3,
       [](const json& j) {
         return j["status"] == "singular" && j["error"] == "undetermined";
       }},
      {"reconstruct hyperbolic", "reconstruct",
       doc("hyperbolic", "midpoints", {rt3 / s10, rt3 / s10, 4 / s10},
           {0, rt3 / s6, 3 / s6}, {rt3 / s6, 0, 3 / s6}),
       0, [](const json& j) { return j["residual"].get<double>() < 1e-10; }},
  };

  std::string fail;
  for (const Transcript& t : transcripts) {
    const CliRun first = run_cli(cli, t.sub, t.request);
    const CliRun second = run_cli(cli, t.sub, t.request);
    if (first.code != t.want_code) {
      fail = std::string(t.name) + ": exit " + std::to_string(first.code);
      break;
    }
    if (first.out != second.out || first.out.empty()) {
      fail = std::string(t.name) + ": replay differs";
      break;
    }
    json parsed;
    try {
      parsed = json::parse(first.out);
    } catch (...) {
      fail = std::string(t.name) + ": unparsable output";
      break;
    }
    if (!t.check(parsed)) {
      fail = std::string(t.name) + ": payload check failed";
      break;
    }
  }
  report(9, "cli transcripts replay bit-identically", fail.empty(),
         fail.empty() ? "9 transcripts" : fail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0) cli = arg.substr(6);
  }
  if (cli.empty()) {
    if (const char* env = std::getenv("GEODTRI_CLI")) cli = env;
  }

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (cli.empty()) {
    report(9, "cli transcripts replay bit-identically", false, "no --cli path given");
  } else {
    criterion_9(cli);
  }

  std::printf("%s: %d of 9 criteria passed\n", g_failed == 0 ? "OK" : "FAILED",
              9 - g_failed);
  return g_failed == 0 ? 0 : 1;
}
