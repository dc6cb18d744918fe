#pragma once

#include <stdexcept>
#include <string>

namespace geodtri {

// Failure categories raised by the geometry kernels.  The CLI maps them to
// exit codes: invalid input conditions exit 2, mathematically singular or
// unrealizable configurations exit 3.
enum class errc {
  zero_axis,
  identity_rotation,
  not_unit,
  not_on_hyperboloid,
  antipodal_pair,
  antipodal_corners,
  degenerate_arg,
  singular_midpoints,
  undetermined,
  not_realizable,
  degenerate_triangle,
  quadrature_failure,
  invalid_argument,
};

const char* errc_name(errc code);

// True for conditions that describe a singular or unrealizable configuration
// of otherwise well-formed inputs (as opposed to malformed input).
bool errc_is_singular(errc code);

class GeoError : public std::runtime_error {
 public:
  GeoError(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& message) {
  throw GeoError(code, message);
}

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::zero_axis: return "zero_axis";
    case errc::identity_rotation: return "identity_rotation";
    case errc::not_unit: return "not_unit";
    case errc::not_on_hyperboloid: return "not_on_hyperboloid";
    case errc::antipodal_pair: return "antipodal_pair";
    case errc::antipodal_corners: return "antipodal_corners";
    case errc::degenerate_arg: return "degenerate_arg";
    case errc::singular_midpoints: return "singular_midpoints";
    case errc::undetermined: return "undetermined";
    case errc::not_realizable: return "not_realizable";
    case errc::degenerate_triangle: return "degenerate_triangle";
    case errc::quadrature_failure: return "quadrature_failure";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

inline bool errc_is_singular(errc code) {
  switch (code) {
    case errc::not_unit:
    case errc::not_on_hyperboloid:
    case errc::invalid_argument:
      return false;
    default:
      return true;
  }
}

}  // namespace geodtri
