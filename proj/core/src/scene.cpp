#include "busekit/scene.hpp"

#include <fstream>

namespace busekit {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(Errc::parse_error, msg); }

}  // namespace

Point SceneCurve::operator()(double t) const {
  if (line) return eval_line(*line, t);
  std::vector<double> out(polynomial.front().size(), 0.0);
  double power = 1.0;
  for (const auto& c : polynomial) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[i] * power;
    power *= t;
  }
  return Point(std::move(out));
}

Scene parse_scene(const Json& j) {
  require_keys(j,
               {"schema_version", "name", "description", "space", "omega", "lines", "isometries", "tolerances",
                "seed", "samples", "region_scale"},
               "scene");
  Scene s;
  if (j.contains("schema_version")) {
    if (!j["schema_version"].is_number_integer() || j["schema_version"] != kSchemaVersion) {
      parse_fail("scene: unsupported schema_version");
    }
  }
  if (j.contains("name")) s.name = j["name"].get<std::string>();
  if (j.contains("description")) s.description = j["description"].get<std::string>();

  Tolerances tol;
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    require_keys(t, {"distance", "limit", "check"}, "tolerances");
    if (t.contains("distance")) tol.distance = t["distance"].get<double>();
    if (t.contains("limit")) tol.limit = t["limit"].get<double>();
    if (t.contains("check")) s.check_tolerance = t["check"].get<double>();
    if (!(tol.distance > 0.0) || !(tol.limit > 0.0) || !(s.check_tolerance > 0.0)) {
      parse_fail("tolerances: values must be positive");
    }
  }
  if (!j.contains("space")) parse_fail("scene: missing \"space\"");
  s.space = parse_space(j["space"], tol);

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) parse_fail("scene: seed must be a non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_unsigned() || j["samples"].get<std::size_t>() < 2) {
      parse_fail("scene: samples must be an integer >= 2");
    }
    s.samples = j["samples"].get<std::size_t>();
  }
  if (j.contains("region_scale")) {
    s.region_scale = j["region_scale"].get<double>();
    if (!(s.region_scale > 0.0)) parse_fail("scene: region_scale must be positive");
  }
  if (j.contains("omega")) {
    require_keys(j["omega"], {"base", "direction", "endpoints", "angle", "weights", "factors"}, "omega");
    s.omega = parse_line(j["omega"], s.space);
  }

  if (j.contains("lines")) {
    if (!j["lines"].is_array()) parse_fail("scene: \"lines\" must be an array");
    std::size_t index = 0;
    for (const auto& l : j["lines"]) {
      SceneCurve c;
      c.name = l.contains("name") ? l["name"].get<std::string>() : "line" + std::to_string(index);
      c.from = -s.region_scale;
      c.to = s.region_scale;
      if (l.contains("interval")) {
        const Json& iv = l["interval"];
        if (!iv.is_array() || iv.size() != 2) parse_fail("line: \"interval\" must be [from, to]");
        c.from = iv[0].get<double>();
        c.to = iv[1].get<double>();
        if (!(c.from < c.to)) parse_fail("line: empty interval");
      }
      if (l.contains("polynomial")) {
        require_keys(l, {"name", "polynomial", "interval"}, "line");
        if (s.space.kind() != SpaceKind::lp) parse_fail("line: polynomial curves need an lp space");
        for (const auto& coeff : l["polynomial"]) {
          auto v = coeff.get<std::vector<double>>();
          if (v.size() != s.space.arity()) throw Error(Errc::dimension_mismatch, "line: polynomial coefficient size");
          c.polynomial.push_back(std::move(v));
        }
        if (c.polynomial.empty()) parse_fail("line: empty polynomial");
      } else {
        c.line = parse_line(l, s.space);
      }
      s.curves.push_back(std::move(c));
      ++index;
    }
  }

  if (j.contains("isometries")) {
    if (!j["isometries"].is_array()) parse_fail("scene: \"isometries\" must be an array");
    for (const auto& f : j["isometries"]) {
      if (!f.contains("name") || !f["name"].is_string()) parse_fail("isometry: missing \"name\"");
      s.isometries.push_back({f["name"].get<std::string>(), parse_isometry(f)});
    }
  }
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read scene file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("scene is not valid JSON: ") + e.what());
  }
  try {
    return parse_scene(j);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("scene has a field of the wrong type: ") + e.what());
  }
}

}  // namespace busekit
