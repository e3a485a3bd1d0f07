#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "busekit/scene.hpp"

namespace busekit::cli {

namespace {

struct Loaded {
  Scene scene;
  CheckOptions check;
};

Loaded load(const Options& opt) {
  Loaded l{load_scene(opt.scene), {}};
  l.check.seed = resolve_seed(opt.seed, l.scene.seed);
  l.check.samples = opt.samples.value_or(l.scene.samples);
  l.check.tolerance = opt.tol.value_or(l.scene.check_tolerance);
  if (l.check.samples < 2) throw Error(Errc::parse_error, "--samples must be at least 2");
  if (opt.format != "json" && opt.format != "csv") throw Error(Errc::parse_error, "--format must be json or csv");
  return l;
}

const GeodesicLine& require_omega(const Scene& s) {
  if (!s.omega) throw Error(Errc::parse_error, "scene has no \"omega\"");
  return *s.omega;
}

Json header(const std::string& command, const Loaded& l) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["scene"] = l.scene.name;
  j["space"] = to_json(l.scene.space);
  j["seed"] = l.check.seed;
  j["samples"] = l.check.samples;
  j["tolerance"] = l.check.tolerance;
  return j;
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw Error(Errc::parse_error, "cannot write " + opt.out);
  file << text;
}

std::string point_text(const Point& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " " : "") + format_double(x[i]);
  return s;
}

template <class Body>
int guarded(const Options& opt, std::ostream& err, Body&& body) {
  Loaded l;
  try {
    l = load(opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return parse_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return parse_failure;
  }
  try {
    return body(l);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error ? parse_failure : failed;
  }
}

std::vector<std::size_t> by_name(const std::vector<SceneIsometry>& isos) {
  std::vector<std::size_t> order(isos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return isos[a].name < isos[b].name; });
  return order;
}

VerifyOptions verify_options(const Loaded& l) {
  VerifyOptions v;
  v.seed = l.check.seed;
  v.region_scale = l.scene.region_scale;
  return v;
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> scene) {
  if (flag) return *flag;
  if (scene) return *scene;
  if (const char* env = std::getenv("BUSEMANN_KIT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw Error(Errc::parse_error, "BUSEMANN_KIT_SEED is not an unsigned integer");
  }
  return 1;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, err, [&](const Loaded& l) {
    const Scene& s = l.scene;
    const ModelSpace model(s.space, s.region_scale);
    std::vector<CheckReport> reports;
    reports.push_back(certify_busemann(model, l.check));
    for (const auto& c : s.curves) {
      reports.push_back(combine_reports("curve " + c.name, {check_geodesic(model, c, c.from, c.to, l.check)}));
    }
    if (s.omega) {
      const LineSpace h = build_line_space(s.space, *s.omega, s.region_scale);
      reports.push_back(certify_linespace_busemann(h, l.check));
    }
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    if (opt.format == "csv") {
      std::string text = csv_header_for_reports();
      for (const auto& r : reports) text += to_csv_rows(r);
      emit(opt, out, text);
    } else {
      Json j = header("verify", l);
      j["pass"] = pass;
      j["reports"] = Json::array();
      for (const auto& r : reports) j["reports"].push_back(to_json(r));
      emit(opt, out, j.dump(2) + "\n");
    }
    for (const auto& r : reports) {
      if (!r.pass) err << "failed: " << r.property << " (worst violation " << format_double(r.worst_violation) << ")\n";
    }
    return pass ? ok : failed;
  });
}

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, err, [&](const Loaded& l) {
    const Scene& s = l.scene;
    const GeodesicLine& omega = require_omega(s);
    std::vector<Point> points;
    if (!opt.points.empty()) {
      std::ifstream in(opt.points);
      if (!in) throw Error(Errc::parse_error, "cannot read points file " + opt.points);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("points file is not valid JSON: ") + e.what());
      }
      if (!j.is_array()) throw Error(Errc::parse_error, "points file must hold an array of points");
      for (const auto& p : j) points.push_back(parse_point(p));
    }
    Rng rng(l.check.seed);
    for (std::size_t k = 0; k < opt.random_points; ++k) {
      points.push_back(random_point_in_x_omega(s.space, omega, s.region_scale, rng));
    }
    Json rows = Json::array();
    std::string csv = "index,input,line_base,t,residual,status\n";
    double worst = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      const Point& x = points[k];
      Json row;
      row["index"] = k;
      row["input"] = to_json(x);
      try {
        validate_point(s.space, x);
        const EvInverse inv = ev_inverse(s.space, omega, x);
        const double residual = distance(s.space, ev(inv.line, inv.t), x);
        worst = std::max(worst, residual);
        row["line_base"] = to_json(inv.line.base());
        row["t"] = inv.t;
        row["residual"] = residual;
        row["status"] = "ok";
        csv += std::to_string(k) + "," + point_text(x) + "," + point_text(inv.line.base()) + "," +
               format_double(inv.t) + "," + format_double(residual) + ",ok\n";
      } catch (const Error& e) {
        const std::string status = e.code() == Errc::not_in_x_omega ? "not in X_omega" : e.what();
        row["status"] = status;
        csv += std::to_string(k) + "," + point_text(x) + ",,,," + csv_field(status) + "\n";
      }
      rows.push_back(row);
    }
    if (opt.format == "csv") {
      emit(opt, out, csv);
    } else {
      Json j = header("decompose", l);
      j["omega"] = to_json(omega);
      j["max_residual"] = worst;
      j["rows"] = rows;
      emit(opt, out, j.dump(2) + "\n");
    }
    return ok;
  });
}

int cmd_classify(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, err, [&](const Loaded& l) {
    const Scene& s = l.scene;
    Json rows = Json::array();
    std::string csv = "name,class,minimal_displacement,attainment,witness\n";
    bool any_error = false;
    for (std::size_t i : by_name(s.isometries)) {
      const SceneIsometry& iso = s.isometries[i];
      Json row;
      row["name"] = iso.name;
      try {
        const IsometrySpec f = verify_isometry(s.space, iso.spec, verify_options(l));
        const IsometryClass c = classify(f);
        const Json cj = to_json(c);
        for (const auto& item : cj.items()) row[item.key()] = item.value();
        csv += csv_field(iso.name) + "," + to_string(c.kind) + "," + format_double(c.displacement) + "," +
               to_string(c.attainment) + "," + csv_field(c.witness) + "\n";
      } catch (const Error& e) {
        any_error = true;
        row["error"] = e.what();
        csv += csv_field(iso.name) + ",error,,," + csv_field(e.what()) + "\n";
      }
      rows.push_back(row);
    }
    if (opt.format == "csv") {
      emit(opt, out, csv);
    } else {
      Json j = header("classify", l);
      j["rows"] = rows;
      emit(opt, out, j.dump(2) + "\n");
    }
    return any_error ? failed : ok;
  });
}

int cmd_induced(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, err, [&](const Loaded& l) {
    const Scene& s = l.scene;
    const GeodesicLine& omega = require_omega(s);
    Json rows = Json::array();
    std::string csv = "name,foliation,g,g_omega,axis_parallel,verdict,violations,note\n";
    bool violated = false;
    bool unknown = false;
    for (std::size_t i : by_name(s.isometries)) {
      const SceneIsometry& iso = s.isometries[i];
      Json row;
      row["name"] = iso.name;
      std::string line = csv_field(iso.name) + ",";
      try {
        const IsometrySpec g = verify_isometry(s.space, iso.spec, verify_options(l));
        if (preserves_foliation(g, omega) == Foliation::none) {
          row["verdict"] = "skipped";
          row["note"] = "does not preserve foliation";
          line += "no,,,,skipped,,does not preserve foliation\n";
        } else {
          const InducedReport r = classify_induced_pair(omega, g);
          const Json rj = to_json(r);
          for (const auto& item : rj.items()) row[item.key()] = item.value();
          violated = violated || r.verdict == Verdict::violated;
          unknown = unknown || r.verdict == Verdict::inconclusive;
          std::string v;
          for (const auto& s2 : r.violations) v += (v.empty() ? "" : "; ") + s2;
          line += std::string(to_string(r.foliation)) + "," + to_string(r.g.kind) + "," + to_string(r.induced.kind) +
                  "," + (r.axis_parallel ? (*r.axis_parallel ? "yes" : "no") : "") + "," + to_string(r.verdict) + "," +
                  csv_field(v) + "," + csv_field(r.note) + "\n";
        }
      } catch (const Error& e) {
        unknown = true;
        row["verdict"] = "error";
        row["note"] = e.what();
        line += ",unknown,unknown,,error,," + csv_field(e.what()) + "\n";
      }
      csv += line;
      rows.push_back(row);
    }
    if (opt.format == "csv") {
      emit(opt, out, csv);
    } else {
      Json j = header("induced", l);
      j["omega"] = to_json(omega);
      j["rows"] = rows;
      emit(opt, out, j.dump(2) + "\n");
    }
    if (violated) return static_cast<int>(failed);
    return unknown ? static_cast<int>(inconclusive) : static_cast<int>(ok);
  });
}

}  // namespace busekit::cli
