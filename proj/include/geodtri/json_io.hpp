#pragma once

#include <array>
#include <optional>
#include <string>

#include "json.hpp"

#include "geodtri/area.hpp"
#include "geodtri/sphere.hpp"
#include "geodtri/vec3.hpp"

namespace geodtri::jsonio {

using ordered_json = nlohmann::ordered_json;

// Parsed request document.  Parsing is strict: unknown fields, wrong arities,
// non-finite numbers and inconsistent field combinations are rejected with
// errc::invalid_argument.  Manifold membership is NOT checked here; callers
// construct geometry points with their effective tolerances.
struct Request {
  enum class Kind { corners, midpoints };

  Geometry geometry = Geometry::sphere;
  Kind kind = Kind::corners;
  // Three points; planar requests use only the first two coordinates.
  std::array<Vec3, 3> points;
  std::optional<sphere::Side> major_arc;   // sphere corners only
  std::optional<double> zero_tol;          // from "tolerances"
  std::optional<double> manifold_tol;      // from "tolerances"
};

Request parse_request(const std::string& text);

// Compact JSON writer with every floating-point number rendered at 17
// significant digits, so a replayed document parses to identical doubles.
std::string dump17(const ordered_json& j);

ordered_json point_json(const Vec3& v);
ordered_json planar_point_json(const Vec3& v);
ordered_json triple_json(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace geodtri::jsonio
