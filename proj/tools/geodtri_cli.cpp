#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "geodtri/error.hpp"
#include "geodtri/hyperbolic.hpp"
#include "geodtri/json_io.hpp"
#include "geodtri/oracle.hpp"
#include "geodtri/random.hpp"
#include "geodtri/sphere.hpp"
#include "geodtri/verify.hpp"

namespace {

using geodtri::Geometry;
using geodtri::GeoError;
using geodtri::Vec3;
using geodtri::errc;
using geodtri::jsonio::ordered_json;
namespace sphere = geodtri::sphere;
namespace hyp = geodtri::hyp;
namespace oracle = geodtri::oracle;
namespace verify = geodtri::verify;
namespace jsonio = geodtri::jsonio;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSingular = 3;

const char* status_for(errc code) {
  if (!geodtri::errc_is_singular(code)) return "invalid";
  return code == errc::not_realizable ? "not_realizable" : "singular";
}

int exit_for(errc code) {
  return geodtri::errc_is_singular(code) ? kExitSingular : kExitInvalid;
}

// Options shared by the document-driven subcommands.
struct DocOpts {
  std::string geometry;
  std::string file;
  double tol = geodtri::kManifoldTol;
  double zero_tol = geodtri::kZeroTol;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* zero_tol_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--geometry", geometry,
                    "Expected geometry; must match the request document");
    cmd->add_option("--file", file, "Read the request from this file instead of stdin");
    tol_opt = cmd->add_option("--tol", tol,
                              "Manifold membership tolerance for input points");
    zero_tol_opt = cmd->add_option("--zero-tol", zero_tol,
                                   "Zero threshold for midpoint classification");
  }
};

std::string read_input(const std::string& file) {
  std::ostringstream buf;
  if (file.empty()) {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) {
      geodtri::throw_error(errc::invalid_argument, "cannot open input file: " + file);
    }
    buf << in.rdbuf();
  }
  return buf.str();
}

Geometry geometry_from_name(const std::string& name) {
  if (name == "sphere") return Geometry::sphere;
  if (name == "hyperbolic") return Geometry::hyperbolic;
  if (name == "planar") return Geometry::planar;
  geodtri::throw_error(errc::invalid_argument,
                       "geometry must be one of sphere, hyperbolic, planar");
}

// Parse the request and resolve effective tolerances: explicit flags override
// document tolerances, which override the defaults.
jsonio::Request load_request(const DocOpts& opts, double& manifold_tol,
                             double& zero_tol) {
  jsonio::Request req = jsonio::parse_request(read_input(opts.file));
  if (!opts.geometry.empty() &&
      geometry_from_name(opts.geometry) != req.geometry) {
    geodtri::throw_error(errc::invalid_argument,
                         "--geometry does not match the request document");
  }
  manifold_tol = opts.tol_opt->count() > 0 ? opts.tol
                                           : req.manifold_tol.value_or(geodtri::kManifoldTol);
  zero_tol = opts.zero_tol_opt->count() > 0 ? opts.zero_tol
                                            : req.zero_tol.value_or(geodtri::kZeroTol);
  return req;
}

sphere::Point sphere_point(const Vec3& v, double tol) {
  return sphere::Point::from_ambient(v, tol);
}

hyp::Point hyp_point(const Vec3& v, double tol) {
  return hyp::Point::from_ambient(v, tol);
}

double max_component_distance(const Vec3& p, const Vec3& q) {
  return std::max({std::fabs(p.x - q.x), std::fabs(p.y - q.y), std::fabs(p.z - q.z)});
}

struct Outcome {
  ordered_json doc;
  int exit_code = kExitOk;
};

Outcome cmd_area(const DocOpts& opts) {
  double manifold_tol = 0.0, zero_tol = 0.0;
  const jsonio::Request req = load_request(opts, manifold_tol, zero_tol);
  ordered_json doc;
  doc["status"] = "ok";
  doc["geometry"] = geodtri::geometry_name(req.geometry);
  switch (req.geometry) {
    case Geometry::sphere: {
      if (req.kind == jsonio::Request::Kind::corners) {
        const sphere::Triangle t{sphere_point(req.points[0], manifold_tol),
                                 sphere_point(req.points[1], manifold_tol),
                                 sphere_point(req.points[2], manifold_tol),
                                 req.major_arc};
        doc["area"] = sphere::triangle_area(t).value;
        doc["sine_half_area"] = sphere::sine_half_area(t.a, t.b, t.c);
        doc["det3"] = det3(t.a.ambient(), t.b.ambient(), t.c.ambient());
      } else {
        const sphere::Midpoints m{sphere_point(req.points[0], manifold_tol),
                                  sphere_point(req.points[1], manifold_tol),
                                  sphere_point(req.points[2], manifold_tol)};
        const sphere::MidpointClass cls = sphere::classify_midpoints(m, zero_tol);
        try {
          doc["area"] = sphere::area_from_midpoints(m, zero_tol).value;
        } catch (const GeoError& e) {
          if (e.code() != errc::singular_midpoints) throw;
          ordered_json err;
          err["status"] = status_for(e.code());
          err["error"] = geodtri::errc_name(e.code());
          err["class"] = sphere::midpoint_kind_name(cls.kind);
          err["message"] = e.what();
          return {err, exit_for(e.code())};
        }
        doc["class"] = sphere::midpoint_kind_name(cls.kind);
        doc["eta"] = cls.eta;
        doc["det3"] = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
      }
      break;
    }
    case Geometry::hyperbolic: {
      const hyp::Point p0 = hyp_point(req.points[0], manifold_tol);
      const hyp::Point p1 = hyp_point(req.points[1], manifold_tol);
      const hyp::Point p2 = hyp_point(req.points[2], manifold_tol);
      if (req.kind == jsonio::Request::Kind::corners) {
        doc["area"] = hyp::area_from_corners(p0, p1, p2).value;
        doc["sine_half_area"] = hyp::sine_half_area(p0, p1, p2);
        doc["det3"] = det3(p0.ambient(), p1.ambient(), p2.ambient());
      } else {
        const hyp::Midpoints m{p0, p1, p2};
        doc["area"] = hyp::area_from_midpoints(m).value;
        doc["det3"] = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
      }
      break;
    }
    case Geometry::planar: {
      const oracle::PlanarPoint a{req.points[0].x, req.points[0].y};
      const oracle::PlanarPoint b{req.points[1].x, req.points[1].y};
      const oracle::PlanarPoint c{req.points[2].x, req.points[2].y};
      doc["area"] = req.kind == jsonio::Request::Kind::corners
                        ? oracle::planar_area(a, b, c)
                        : oracle::planar_area_from_midpoints(a, b, c);
      break;
    }
  }
  return {doc, kExitOk};
}

Outcome cmd_midpoints(const DocOpts& opts) {
  double manifold_tol = 0.0, zero_tol = 0.0;
  const jsonio::Request req = load_request(opts, manifold_tol, zero_tol);
  (void)zero_tol;
  if (req.kind != jsonio::Request::Kind::corners) {
    geodtri::throw_error(errc::invalid_argument,
                         "the midpoints subcommand requires 'corners'");
  }
  ordered_json doc;
  doc["status"] = "ok";
  doc["geometry"] = geodtri::geometry_name(req.geometry);
  if (req.geometry == Geometry::sphere) {
    const sphere::Triangle t{sphere_point(req.points[0], manifold_tol),
                             sphere_point(req.points[1], manifold_tol),
                             sphere_point(req.points[2], manifold_tol),
                             req.major_arc};
    const sphere::Midpoints m = sphere::midpoints_of(t);
    doc["midpoints"] = jsonio::triple_json(m.alpha.ambient(), m.beta.ambient(),
                                           m.gamma.ambient());
    doc["det3"] = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
  } else if (req.geometry == Geometry::hyperbolic) {
    const hyp::Triangle t{hyp_point(req.points[0], manifold_tol),
                          hyp_point(req.points[1], manifold_tol),
                          hyp_point(req.points[2], manifold_tol)};
    const hyp::Midpoints m = hyp::midpoints_of(t);
    doc["midpoints"] = jsonio::triple_json(m.alpha.ambient(), m.beta.ambient(),
                                           m.gamma.ambient());
    doc["det3"] = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
  } else {
    geodtri::throw_error(errc::invalid_argument,
                         "planar geometry supports the area subcommand only");
  }
  return {doc, kExitOk};
}

Outcome cmd_reconstruct(const DocOpts& opts) {
  double manifold_tol = 0.0, zero_tol = 0.0;
  const jsonio::Request req = load_request(opts, manifold_tol, zero_tol);
  if (req.kind != jsonio::Request::Kind::midpoints) {
    geodtri::throw_error(errc::invalid_argument,
                         "the reconstruct subcommand requires 'midpoints'");
  }
  ordered_json doc;
  doc["status"] = "ok";
  doc["geometry"] = geodtri::geometry_name(req.geometry);
  if (req.geometry == Geometry::sphere) {
    const sphere::Midpoints m{sphere_point(req.points[0], manifold_tol),
                              sphere_point(req.points[1], manifold_tol),
                              sphere_point(req.points[2], manifold_tol)};
    const sphere::MidpointClass cls = sphere::classify_midpoints(m, zero_tol);
    sphere::Triangle t{sphere::Point::normalized({0, 0, 1}),
                       sphere::Point::normalized({0, 0, 1}),
                       sphere::Point::normalized({0, 0, 1}), std::nullopt};
    try {
      t = sphere::reconstruct(m, zero_tol);
    } catch (const GeoError& e) {
      ordered_json err;
      err["status"] = status_for(e.code());
      err["error"] = geodtri::errc_name(e.code());
      err["class"] = sphere::midpoint_kind_name(cls.kind);
      err["message"] = e.what();
      return {err, exit_for(e.code())};
    }
    doc["corners"] = jsonio::triple_json(t.a.ambient(), t.b.ambient(), t.c.ambient());
    if (t.major_arc) doc["major_arc_side"] = sphere::side_name(*t.major_arc);
    doc["class"] = sphere::midpoint_kind_name(cls.kind);
    doc["eta"] = cls.eta;
    const sphere::Midpoints back = sphere::midpoints_of(t);
    doc["residual"] = std::max(
        {max_component_distance(back.alpha.ambient(), m.alpha.ambient()),
         max_component_distance(back.beta.ambient(), m.beta.ambient()),
         max_component_distance(back.gamma.ambient(), m.gamma.ambient())});
    try {
      const sphere::Triangle alt = sphere::reconstruct_closed_form(m, zero_tol);
      double agree = std::max({max_component_distance(alt.a.ambient(), t.a.ambient()),
                               max_component_distance(alt.b.ambient(), t.b.ambient()),
                               max_component_distance(alt.c.ambient(), t.c.ambient())});
      if (alt.major_arc != t.major_arc) agree = std::max(agree, 2.0);
      doc["method_agreement"] = agree;
    } catch (const GeoError&) {
      // The closed form shares its preconditions with the reflection method;
      // losing the diagnostic is not an error.
    }
  } else if (req.geometry == Geometry::hyperbolic) {
    const hyp::Midpoints m{hyp_point(req.points[0], manifold_tol),
                           hyp_point(req.points[1], manifold_tol),
                           hyp_point(req.points[2], manifold_tol)};
    const hyp::Triangle t = hyp::reconstruct(m);
    doc["corners"] = jsonio::triple_json(t.a.ambient(), t.b.ambient(), t.c.ambient());
    const hyp::Midpoints back = hyp::midpoints_of(t);
    doc["residual"] = std::max(
        {max_component_distance(back.alpha.ambient(), m.alpha.ambient()),
         max_component_distance(back.beta.ambient(), m.beta.ambient()),
         max_component_distance(back.gamma.ambient(), m.gamma.ambient())});
  } else {
    geodtri::throw_error(errc::invalid_argument,
                         "planar geometry supports the area subcommand only");
  }
  return {doc, kExitOk};
}

Outcome cmd_classify(const DocOpts& opts) {
  double manifold_tol = 0.0, zero_tol = 0.0;
  const jsonio::Request req = load_request(opts, manifold_tol, zero_tol);
  if (req.kind != jsonio::Request::Kind::midpoints) {
    geodtri::throw_error(errc::invalid_argument,
                         "the classify subcommand requires 'midpoints'");
  }
  ordered_json doc;
  doc["status"] = "ok";
  doc["geometry"] = geodtri::geometry_name(req.geometry);
  if (req.geometry == Geometry::sphere) {
    const sphere::Midpoints m{sphere_point(req.points[0], manifold_tol),
                              sphere_point(req.points[1], manifold_tol),
                              sphere_point(req.points[2], manifold_tol)};
    const sphere::MidpointClass cls = sphere::classify_midpoints(m, zero_tol);
    doc["class"] = sphere::midpoint_kind_name(cls.kind);
    doc["eta"] = cls.eta;
    ordered_json dots;
    dots["alpha_beta"] = cls.dot_alpha_beta;
    dots["beta_gamma"] = cls.dot_beta_gamma;
    dots["gamma_alpha"] = cls.dot_gamma_alpha;
    doc["inner_products"] = dots;
    doc["det3"] = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
  } else if (req.geometry == Geometry::hyperbolic) {
    const hyp::Midpoints m{hyp_point(req.points[0], manifold_tol),
                           hyp_point(req.points[1], manifold_tol),
                           hyp_point(req.points[2], manifold_tol)};
    const double d = det3(m.alpha.ambient(), m.beta.ambient(), m.gamma.ambient());
    doc["det3"] = d;
    doc["realizable"] = (1.0 - d) * (1.0 + d) >= geodtri::kRealizableTol;
  } else {
    geodtri::throw_error(errc::invalid_argument,
                         "planar geometry supports the area subcommand only");
  }
  return {doc, kExitOk};
}

// Side flagged by a sphere-suite check at a given sample index, mirroring the
// schedule in the verification kernels.
std::optional<sphere::Side> flagged_side_for(const std::string& check,
                                             std::uint64_t index) {
  if (check == "complement") return static_cast<sphere::Side>(index % 3);
  if (check == "area_consistency" || check == "roundtrip" ||
      check == "method_agreement") {
    if (index % 2 == 1) return static_cast<sphere::Side>((index / 2) % 3);
  }
  return std::nullopt;
}

Outcome cmd_verify(const std::string& geometry_name, std::uint64_t count,
                   std::uint64_t seed, double quadrature_tol, double zero_tol,
                   bool serial) {
  if (geometry_name.empty()) {
    geodtri::throw_error(errc::invalid_argument, "verify requires --geometry");
  }
  geodtri::GeneratorConfig gen;
  gen.seed = seed;
  gen.geometry = geometry_from_name(geometry_name);

  verify::VerifyOptions opts;
  opts.count = count;
  opts.parallel = !serial;
  opts.quadrature_tol = quadrature_tol;
  opts.zero_tol = zero_tol;

  const verify::VerifyReport report = verify::run_suite(gen, opts);

  ordered_json doc;
  doc["status"] = report.pass ? "ok" : "failed";
  doc["geometry"] = geodtri::geometry_name(report.geometry);
  doc["count"] = report.count;
  doc["seed"] = report.seed;
  doc["parallel"] = report.parallel;
  ordered_json checks = ordered_json::array();
  for (const auto& stat : report.checks) {
    ordered_json c;
    c["name"] = stat.name;
    c["tol"] = stat.tol;
    c["max_dev"] = stat.max_dev;
    c["worst_index"] = stat.worst_index;
    c["pass"] = stat.pass;
    checks.push_back(c);
  }
  doc["checks"] = checks;

  if (!report.pass) {
    // Re-generate the first failing check's worst sample in request format so
    // the offending triangle can be replayed through the point subcommands.
    for (const auto& stat : report.checks) {
      if (stat.pass) continue;
      ordered_json sample;
      sample["check"] = stat.name;
      sample["sample_index"] = stat.worst_index;
      ordered_json request;
      request["geometry"] = geodtri::geometry_name(report.geometry);
      if (report.geometry == Geometry::sphere) {
        const sphere::Triangle t = geodtri::random_sphere_triangle(gen, stat.worst_index);
        request["corners"] =
            jsonio::triple_json(t.a.ambient(), t.b.ambient(), t.c.ambient());
        if (const auto side = flagged_side_for(stat.name, stat.worst_index)) {
          request["major_arc_side"] = sphere::side_name(*side);
        }
      } else {
        const hyp::Triangle t = geodtri::random_hyp_triangle(gen, stat.worst_index);
        request["corners"] =
            jsonio::triple_json(t.a.ambient(), t.b.ambient(), t.c.ambient());
      }
      sample["request"] = request;
      doc["worst_sample"] = sample;
      break;
    }
  }
  return {doc, report.pass ? kExitOk : kExitVerifyFailed};
}

void emit(const Outcome& outcome) {
  std::cout << jsonio::dump17(outcome.doc) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented geodesic triangle areas, midpoint conversions and "
               "self-verification on the sphere and the hyperbolic plane"};
  app.require_subcommand(1);

  DocOpts area_opts, midpoints_opts, reconstruct_opts, classify_opts;
  CLI::App* area_cmd = app.add_subcommand("area", "Oriented area from corners or midpoints");
  area_opts.attach(area_cmd);
  CLI::App* midpoints_cmd =
      app.add_subcommand("midpoints", "Side midpoints of a corner triangle");
  midpoints_opts.attach(midpoints_cmd);
  CLI::App* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Corners from a midpoint triple");
  reconstruct_opts.attach(reconstruct_cmd);
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Classify a midpoint triple");
  classify_opts.attach(classify_cmd);

  std::string verify_geometry;
  std::uint64_t verify_count = 1000;
  std::uint64_t verify_seed = 0;
  double verify_tol = 1e-8;
  double verify_zero_tol = geodtri::kZeroTol;
  bool verify_serial = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the seeded self-check suite for one geometry");
  verify_cmd->add_option("--geometry", verify_geometry, "sphere or hyperbolic")
      ->required();
  verify_cmd->add_option("--count", verify_count, "Number of random triangles");
  verify_cmd->add_option("--seed", verify_seed, "Generator seed");
  verify_cmd->add_option("--tol", verify_tol, "Quadrature oracle tolerance");
  verify_cmd->add_option("--zero-tol", verify_zero_tol,
                         "Zero threshold for midpoint classification");
  verify_cmd->add_flag("--serial", verify_serial,
                       "Force the serial reference driver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInvalid;
  }

  try {
    Outcome outcome;
    if (area_cmd->parsed()) {
      outcome = cmd_area(area_opts);
    } else if (midpoints_cmd->parsed()) {
      outcome = cmd_midpoints(midpoints_opts);
    } else if (reconstruct_cmd->parsed()) {
      outcome = cmd_reconstruct(reconstruct_opts);
    } else if (classify_cmd->parsed()) {
      outcome = cmd_classify(classify_opts);
    } else {
      outcome = cmd_verify(verify_geometry, verify_count, verify_seed, verify_tol,
                           verify_zero_tol, verify_serial);
    }
    emit(outcome);
    return outcome.exit_code;
  } catch (const GeoError& e) {
    ordered_json err;
    err["status"] = status_for(e.code());
    err["error"] = geodtri::errc_name(e.code());
    err["message"] = e.what();
    emit({err, 0});
    return exit_for(e.code());
  } catch (const std::exception& e) {
    ordered_json err;
    err["status"] = "invalid";
    err["error"] = "invalid_argument";
    err["message"] = e.what();
    emit({err, 0});
    return kExitInvalid;
  }
}
