#include "busekit/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace busekit {

namespace {

Json number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

Json numbers(std::span<const double> v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

Json ideal_to_json(const IdealPoint& p) {
  if (p.is_infinite()) return "inf";
  return number(p.value());
}

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(Errc::parse_error, msg); }

double get_number(const Json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where + ": expected a number");
  return j.get<double>();
}

std::vector<double> get_numbers(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(get_number(x, where));
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const Point& x) { return numbers(x.coords()); }

Json to_json(const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::lp:
      return Json{{"kind", "lp"}, {"p", space.exponent()}, {"dimension", space.dimension()}};
    case SpaceKind::hyperbolic:
      return Json{{"kind", "hyperbolic"}};
    case SpaceKind::product: {
      Json factors = Json::array();
      for (const auto& f : space.factors()) factors.push_back(to_json(f));
      return Json{{"kind", "product"}, {"factors", factors}};
    }
  }
  return {};
}

Json to_json(const GeodesicLine& line) {
  switch (line.kind()) {
    case SpaceKind::lp:
      return Json{{"base", numbers(line.lp().base)}, {"direction", numbers(line.lp().dir)}};
    case SpaceKind::hyperbolic: {
      const Moebius& m = line.hyperbolic().frame;
      return Json{{"base", to_json(eval_line(line, 0.0))},
                  {"endpoints", Json::array({ideal_to_json(line_start(line)), ideal_to_json(line_end(line))})},
                  {"frame", Json::array({m.a, m.b, m.c, m.d})}};
    }
    case SpaceKind::product: {
      Json tracks = Json::array();
      for (const auto& t : line.product().tracks) tracks.push_back(Json{{"weight", t.weight}, {"line", to_json(t.line)}});
      return Json{{"tracks", tracks}};
    }
  }
  return {};
}

Json to_json(const CheckReport& report) {
  Json j;
  j["property"] = report.property;
  j["pass"] = report.pass;
  j["worst_violation"] = number(report.worst_violation);
  j["tolerance"] = report.tolerance;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  Json w = Json::object();
  for (const auto& item : report.witness) w[item.label] = numbers(item.values);
  j["witness"] = w;
  if (!report.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : report.parts) parts.push_back(to_json(p));
    j["parts"] = parts;
  }
  return j;
}

Json to_json(const IsometryClass& c) {
  Json j;
  j["class"] = to_string(c.kind);
  j["minimal_displacement"] = number(c.displacement);
  j["attainment"] = to_string(c.attainment);
  j["semi_simple"] = c.semi_simple;
  j["witness"] = c.witness;
  if (c.argmin) j["argmin"] = to_json(*c.argmin);
  return j;
}

Json to_json(const InducedReport& r) {
  Json j;
  j["foliation"] = to_string(r.foliation);
  j["g"] = to_json(r.g);
  j["g_omega"] = to_json(r.induced);
  j["axis_parallel"] = r.axis_parallel ? Json(*r.axis_parallel ? "yes" : "no") : Json(nullptr);
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_header_for_reports() { return "property,pass,violation,seed\n"; }

std::string to_csv_rows(const CheckReport& report) {
  std::string out = csv_field(report.property) + "," + (report.pass ? "true" : "false") + "," +
                    format_double(report.worst_violation) + "," + std::to_string(report.seed) + "\n";
  for (const auto& p : report.parts) out += to_csv_rows(p);
  return out;
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) parse_fail(where + ": expected an object");
  for (const auto& item : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; })) {
      parse_fail(where + ": unknown field \"" + item.key() + "\"");
    }
  }
}

SpaceDescriptor parse_space(const Json& j, Tolerances tol) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) parse_fail("space: missing \"kind\"");
  const std::string kind = j["kind"];
  if (kind == "lp") {
    require_keys(j, {"kind", "p", "dimension"}, "space");
    if (!j.contains("p") || !j.contains("dimension")) parse_fail("space: lp needs \"p\" and \"dimension\"");
    if (!j["dimension"].is_number_integer()) parse_fail("space: dimension must be an integer");
    return SpaceDescriptor::lp(j["dimension"].get<int>(), get_number(j["p"], "space.p"), tol);
  }
  if (kind == "hyperbolic") {
    require_keys(j, {"kind"}, "space");
    return SpaceDescriptor::hyperbolic_plane(tol);
  }
  if (kind == "real") {
    require_keys(j, {"kind"}, "space");
    return SpaceDescriptor::real_line(tol);
  }
  if (kind == "product") {
    require_keys(j, {"kind", "factors"}, "space");
    if (!j.contains("factors") || !j["factors"].is_array()) parse_fail("space: product needs \"factors\"");
    std::vector<SpaceDescriptor> factors;
    for (const auto& f : j["factors"]) factors.push_back(parse_space(f, tol));
    return SpaceDescriptor::product(std::move(factors), tol);
  }
  parse_fail("space: unknown kind \"" + kind + "\"");
}

Point parse_point(const Json& j) { return Point(get_numbers(j, "point")); }

IdealPoint parse_ideal(const Json& j) {
  if (j.is_string() && (j == "inf" || j == "infinity")) return IdealPoint::infinity();
  return IdealPoint::finite(get_number(j, "endpoint"));
}

DirectionSpec parse_direction(const Json& j, const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::lp:
      if (!j.contains("direction")) parse_fail("line: lp lines need \"direction\"");
      return DirectionSpec(get_numbers(j["direction"], "direction"));
    case SpaceKind::hyperbolic:
      if (j.contains("endpoints")) {
        const Json& e = j["endpoints"];
        if (!e.is_array() || e.size() != 2) parse_fail("line: \"endpoints\" needs two entries");
        return DirectionSpec(DirectionSpec::Endpoints{parse_ideal(e[0]), parse_ideal(e[1])});
      }
      if (j.contains("angle")) return DirectionSpec(DirectionSpec::Angle{get_number(j["angle"], "angle")});
      parse_fail("line: hyperbolic lines need \"endpoints\" or \"angle\"");
    case SpaceKind::product: {
      if (!j.contains("weights") || !j.contains("factors")) parse_fail("line: product lines need \"weights\" and \"factors\"");
      const Json& f = j["factors"];
      if (!f.is_array() || f.size() != space.factors().size()) parse_fail("line: one factor direction per factor");
      DirectionSpec::Weighted w;
      w.weights = get_numbers(j["weights"], "weights");
      for (std::size_t i = 0; i < f.size(); ++i) {
        require_keys(f[i], {"direction", "endpoints", "angle", "weights", "factors"}, "line factor");
        const bool empty = f[i].empty();
        if (empty) {
          w.factors.push_back(DirectionSpec(std::vector<double>{}));
        } else {
          w.factors.push_back(parse_direction(f[i], space.factors()[i]));
        }
      }
      return DirectionSpec(std::move(w));
    }
  }
  parse_fail("line: unsupported space");
}

GeodesicLine parse_line(const Json& j, const SpaceDescriptor& space) {
  require_keys(j, {"name", "base", "direction", "endpoints", "angle", "weights", "factors", "interval"}, "line");
  if (!j.contains("base")) parse_fail("line: missing \"base\"");
  return make_line(space, parse_point(j["base"]), parse_direction(j, space));
}

IsometrySpec parse_isometry(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) parse_fail("isometry: missing \"kind\"");
  const std::string kind = j["kind"];
  if (kind == "affine") {
    require_keys(j, {"name", "kind", "A", "b"}, "isometry");
    if (!j.contains("A") || !j.contains("b") || !j["A"].is_array()) parse_fail("isometry: affine needs \"A\" and \"b\"");
    std::vector<std::vector<double>> a;
    for (const auto& row : j["A"]) a.push_back(get_numbers(row, "isometry.A"));
    return IsometrySpec::affine(a, get_numbers(j["b"], "isometry.b"));
  }
  if (kind == "moebius") {
    require_keys(j, {"name", "kind", "m"}, "isometry");
    if (!j.contains("m")) parse_fail("isometry: moebius needs \"m\"");
    const Json& m = j["m"];
    if (!m.is_array() || m.size() != 2) parse_fail("isometry: \"m\" must be [[a, b], [c, d]]");
    const auto r0 = get_numbers(m[0], "isometry.m");
    const auto r1 = get_numbers(m[1], "isometry.m");
    if (r0.size() != 2 || r1.size() != 2) parse_fail("isometry: \"m\" must be [[a, b], [c, d]]");
    return IsometrySpec::moebius(r0[0], r0[1], r1[0], r1[1]);
  }
  if (kind == "pair") {
    require_keys(j, {"name", "kind", "factors"}, "isometry");
    if (!j.contains("factors") || !j["factors"].is_array()) parse_fail("isometry: pair needs \"factors\"");
    std::vector<IsometrySpec> parts;
    for (const auto& f : j["factors"]) parts.push_back(parse_isometry(f));
    return IsometrySpec::pair(std::move(parts));
  }
  parse_fail("isometry: unknown kind \"" + kind + "\"");
}

}  // namespace busekit
