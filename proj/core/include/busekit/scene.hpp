#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "busekit/serialization.hpp"

namespace busekit {

/// A named curve to check with check_geodesic: either a line of the space or
/// a polynomial curve c(t) = sum_k c_k t^k in lp-space coordinates.
struct SceneCurve {
  std::string name;
  std::optional<GeodesicLine> line;
  std::vector<std::vector<double>> polynomial;
  double from = 0.0;
  double to = 0.0;

  Point operator()(double t) const;
};

struct SceneIsometry {
  std::string name;
  IsometrySpec spec;  // unverified
};

struct Scene {
  int schema_version = kSchemaVersion;
  std::string name;
  std::string description;
  SpaceDescriptor space = SpaceDescriptor::real_line();
  std::optional<GeodesicLine> omega;
  std::vector<SceneCurve> curves;
  std::vector<SceneIsometry> isometries;
  double check_tolerance = 1e-7;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 10000;
  double region_scale = 10.0;
};

/// Strict parse: unknown fields throw parse_error; invalid geometry throws
/// the matching domain error (invalid_space, invalid_direction, ...).
Scene parse_scene(const Json& j);
Scene load_scene(const std::string& path);

}  // namespace busekit
