#include "geodtri/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "geodtri/error.hpp"

namespace geodtri::jsonio {

namespace {

[[noreturn]] void reject(const std::string& message) {
  throw_error(errc::invalid_argument, message);
}

Geometry parse_geometry(const ordered_json& j) {
  if (!j.is_string()) reject("field 'geometry' must be a string");
  const std::string s = j.get<std::string>();
  if (s == "sphere") return Geometry::sphere;
  if (s == "hyperbolic") return Geometry::hyperbolic;
  if (s == "planar") return Geometry::planar;
  reject("field 'geometry' must be one of sphere, hyperbolic, planar");
}

sphere::Side parse_side(const ordered_json& j) {
  if (!j.is_string()) reject("field 'major_arc_side' must be a string");
  const std::string s = j.get<std::string>();
  if (s == "bc") return sphere::Side::bc;
  if (s == "ca") return sphere::Side::ca;
  if (s == "ab") return sphere::Side::ab;
  reject("field 'major_arc_side' must be one of bc, ca, ab");
}

double parse_finite(const ordered_json& j, const char* what) {
  if (!j.is_number()) reject(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) reject(std::string(what) + " must be finite");
  return v;
}

std::array<Vec3, 3> parse_points(const ordered_json& j, std::size_t arity,
                                 const char* field) {
  if (!j.is_array() || j.size() != 3) {
    reject(std::string("field '") + field + "' must be an array of 3 points");
  }
  std::array<Vec3, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const ordered_json& p = j[i];
    if (!p.is_array() || p.size() != arity) {
      reject(std::string("points in '") + field + "' must be arrays of " +
             std::to_string(arity) + " numbers");
    }
    Vec3 v;
    v.x = parse_finite(p[0], "point coordinate");
    v.y = parse_finite(p[1], "point coordinate");
    v.z = arity == 3 ? parse_finite(p[2], "point coordinate") : 0.0;
    out[i] = v;
  }
  return out;
}

}  // namespace

Request parse_request(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    reject(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) reject("request must be a JSON object");

  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "geometry" && key != "corners" && key != "midpoints" &&
        key != "major_arc_side" && key != "tolerances") {
      reject("unknown field '" + key + "'");
    }
  }
  if (!j.contains("geometry")) reject("missing required field 'geometry'");

  Request req;
  req.geometry = parse_geometry(j.at("geometry"));

  const bool has_corners = j.contains("corners");
  const bool has_midpoints = j.contains("midpoints");
  if (has_corners == has_midpoints) {
    reject("request must supply exactly one of 'corners' or 'midpoints'");
  }
  req.kind = has_corners ? Request::Kind::corners : Request::Kind::midpoints;
  const std::size_t arity = req.geometry == Geometry::planar ? 2 : 3;
  req.points = parse_points(j.at(has_corners ? "corners" : "midpoints"), arity,
                            has_corners ? "corners" : "midpoints");

  if (j.contains("major_arc_side")) {
    if (req.geometry != Geometry::sphere || !has_corners) {
      reject("'major_arc_side' applies only to sphere corner requests");
    }
    req.major_arc = parse_side(j.at("major_arc_side"));
  }

  if (j.contains("tolerances")) {
    const ordered_json& t = j.at("tolerances");
    if (!t.is_object()) reject("field 'tolerances' must be an object");
    for (const auto& item : t.items()) {
      const std::string& key = item.key();
      double v = parse_finite(item.value(), ("tolerance '" + key + "'").c_str());
      if (v < 0.0) reject("tolerance '" + key + "' must be non-negative");
      if (key == "zero_tol") {
        req.zero_tol = v;
      } else if (key == "manifold_tol") {
        req.manifold_tol = v;
      } else {
        reject("unknown tolerance '" + key + "'");
      }
    }
  }
  return req;
}

namespace {

void write_value(std::string& out, const ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out += ',';
        first = false;
        out += ordered_json(item.key()).dump();
        out += ':';
        write_value(out, item.value());
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_value(out, j[i]);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump17(const ordered_json& j) {
  std::string out;
  write_value(out, j);
  return out;
}

ordered_json point_json(const Vec3& v) {
  return ordered_json::array({v.x, v.y, v.z});
}

ordered_json planar_point_json(const Vec3& v) {
  return ordered_json::array({v.x, v.y});
}

ordered_json triple_json(const Vec3& a, const Vec3& b, const Vec3& c) {
  return ordered_json::array({point_json(a), point_json(b), point_json(c)});
}

}  // namespace geodtri::jsonio
