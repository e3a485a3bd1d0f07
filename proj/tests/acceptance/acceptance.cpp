// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "busekit/line_space.hpp"
#include "busekit/scene.hpp"
#include "cli/commands.hpp"

using namespace busekit;

namespace {

constexpr std::uint64_t kSeed = 20240611;

constexpr std::size_t kCertifySamples = 10000;
constexpr double kCertifyTol = 1e-7;
constexpr double kCertifySeconds = 60.0;

constexpr int kStripPairs = 100;
constexpr int kStripSlices = 6;
constexpr int kStripDiagonals = 10;
constexpr double kStripTol = 1e-7;

constexpr int kLineSpacePairs = 1000;
constexpr double kLineSpaceTol = 1e-6;
constexpr double kLineSpaceCertifyTol = 1e-7;

constexpr int kSplitPoints = 1000;
constexpr double kSplitTol = 1e-7;

constexpr int kLimitPoints = 200;
constexpr double kLimitTol = 1e-6;

constexpr double kCatalogTol = 1e-6;
constexpr std::size_t kCatalogMinimum = 12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string scene_path(const std::string& name) { return std::string(BUSEKIT_SCENE_DIR) + "/" + name; }

const std::vector<std::string> kScenes = {"lp4-plane.json", "hyperbolic.json", "product-h2xr.json"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// acosh(1 + |z - w|^2 / (2 Im z Im w)), independent of the library's form
double h2_distance(const Point& z, const Point& w) {
  const double dx = z[0] - w[0], dy = z[1] - w[1];
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z[1] * w[1]));
}

Outcome busemann_certification() {
  const std::vector<SpaceDescriptor> spaces = {
      SpaceDescriptor::lp(2, 1.5), SpaceDescriptor::lp(2, 2.0), SpaceDescriptor::lp(2, 4.0),
      SpaceDescriptor::hyperbolic_plane(),
      SpaceDescriptor::product({SpaceDescriptor::hyperbolic_plane(), SpaceDescriptor::real_line()})};
  Outcome o;
  double worst = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& s : spaces) {
    const ModelSpace m(s);
    const CheckOptions opt{kCertifySamples, kCertifyTol, kSeed};
    for (const auto& r : {check_busemann_convexity(m, opt), check_conical(m, opt), check_consistent(m, opt)}) {
      worst = std::max(worst, r.worst_violation);
      if (!r.pass) {
        o.pass = false;
        o.detail += r.property + " failed on " + s.describe() + "; ";
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > kCertifySeconds) o.pass = false;
  o.detail += "5 spaces x 3 checks x " + std::to_string(kCertifySamples) + " samples, worst " + fmt(worst) +
              ", " + fmt(seconds) + " s";
  return o;
}

Outcome strip_suite() {
  const std::vector<SpaceDescriptor> spaces = {
      SpaceDescriptor::lp(2, 4.0), SpaceDescriptor::lp(3, 1.5),
      SpaceDescriptor::product({SpaceDescriptor::hyperbolic_plane(), SpaceDescriptor::real_line()})};
  Outcome o;
  double worst = 0.0;
  int strips = 0;
  for (const auto& s : spaces) {
    Rng rng(kSeed);
    for (int k = 0; k < kStripPairs; ++k) {
      const auto g = random_line(s, 5.0, rng);
      const auto e = random_parallel(s, g, 5.0, rng);
      const StripMap strip = build_strip(s, g, e);
      const double r = strip.width();
      if (r <= 0.0) continue;
      ++strips;
      std::vector<GeodesicLine> slices;
      for (int i = 0; i < kStripSlices; ++i) {
        const double u = std::min(r, r * i / (kStripSlices - 1));
        slices.push_back(strip_line(strip, u));
        const auto rep = check_geodesic(ModelSpace(s), [&](double t) { return eval_line(slices.back(), t); }, -10.0,
                                        10.0, {200, kStripTol, kSeed + k});
        worst = std::max(worst, rep.worst_violation);
        if (!rep.pass) o.pass = false;
      }
      for (int i = 0; i < kStripSlices; ++i) {
        for (int j = i + 1; j < kStripSlices; ++j) {
          const double gap = std::abs(line_hausdorff(s, slices[i], slices[j]) - r * (j - i) / (kStripSlices - 1));
          worst = std::max(worst, gap);
          if (gap > kStripTol) o.pass = false;
        }
      }
      for (int d = 0; d < kStripDiagonals; ++d) {
        const auto rep = check_strip_diagonal(strip, rng.uniform(-5, 5), rng.uniform(-3, 3), {100, kStripTol, kSeed + d});
        worst = std::max(worst, rep.worst_violation);
        if (!rep.pass) o.pass = false;
      }
    }
  }
  o.detail = std::to_string(strips) + " strips in l4, l1.5 and H2 x R, worst " + fmt(worst);
  return o;
}

Outcome line_space_checks() {
  const Scene sc = load_scene(scene_path("product-h2xr.json"));
  const LineSpace h = build_line_space(sc.space, *sc.omega, sc.region_scale);
  const CheckReport cert = certify_linespace_busemann(h, {kCertifySamples, kLineSpaceCertifyTol, kSeed});
  Outcome o;
  o.pass = cert.pass;
  double worst = 0.0;
  Rng rng(kSeed);
  for (int k = 0; k < kLineSpacePairs; ++k) {
    const LinePoint a = h.sample(rng), b = h.sample(rng);
    const double gap = std::abs(linespace_distance(h, a, b) - h2_distance(h.to_factor(a), h.to_factor(b)));
    worst = std::max(worst, gap);
  }
  if (worst > kLineSpaceTol) o.pass = false;
  o.detail = "certify worst " + fmt(cert.worst_violation) + "; " + std::to_string(kLineSpacePairs) +
             " distance pairs vs H2, worst " + fmt(worst);
  return o;
}

Outcome splitting() {
  Outcome o;
  double roundtrip = 0.0, level = 0.0;
  for (const auto& name : kScenes) {
    const Scene sc = load_scene(scene_path(name));
    const BusemannEvaluator b(sc.space, *sc.omega);
    Rng rng(kSeed);
    for (int k = 0; k < kSplitPoints; ++k) {
      const Point x = random_point_in_x_omega(sc.space, *sc.omega, 5.0, rng);
      const EvInverse inv = ev_inverse(sc.space, *sc.omega, x);
      roundtrip = std::max(roundtrip, distance(sc.space, ev(inv.line, inv.t), x));
      const double t = rng.uniform(-10, 10);
      level = std::max(level, std::abs(b.value(ev(inv.line, t)) + t));
    }
  }
  o.pass = roundtrip <= kSplitTol && level <= kSplitTol;
  o.detail = "3 scenes x " + std::to_string(kSplitPoints) + " points, roundtrip " + fmt(roundtrip) + ", level set " +
             fmt(level);
  return o;
}

Outcome busemann_limit() {
  Outcome o;
  double worst = 0.0;
  int evaluations = 0;
  auto record = [&](const LimitDiagnostics& d, double expected) {
    ++evaluations;
    worst = std::max(worst, std::abs(d.value - expected));
    if (!d.converged || !d.monotone || std::abs(d.value - expected) > kLimitTol) o.pass = false;
  };
  Rng rng(kSeed);
  for (double p : {1.5, 2.0, 4.0}) {
    const auto s = SpaceDescriptor::lp(2, p);
    const BusemannEvaluator b(s, make_line(s, Point{0, 0}, std::vector<double>{0, 1}));
    for (int k = 0; k < kLimitPoints; ++k) {
      const Point x = random_point(s, 10.0, rng);
      record(b.limit(x), -x[1]);
    }
  }
  const auto h2 = SpaceDescriptor::hyperbolic_plane();
  const BusemannEvaluator b(h2, make_line(h2, Point{0, 1}, DirectionSpec::Endpoints{IdealPoint::finite(0),
                                                                                    IdealPoint::infinity()}));
  for (int k = 0; k < kLimitPoints; ++k) {
    const Point z = random_point(h2, 10.0, rng);
    record(b.limit(z), -std::log(z[1]));
  }
  o.detail = std::to_string(evaluations) + " limits, all monotone, worst " + fmt(worst);
  if (!o.pass) o.detail = std::to_string(evaluations) + " limits, worst " + fmt(worst) + ", see flags";
  return o;
}

struct Expected {
  IsometryKind kind;
  double value;
};

// Hand-derived classes and translation lengths of the bundled catalog.
std::map<std::string, Expected> ground_truth() {
  const double ln4 = std::log(4.0);
  using K = IsometryKind;
  return {
      {"lp4-plane/translate-x", {K::hyperbolic, 1.0}},
      {"lp4-plane/translate-y", {K::hyperbolic, 1.0}},
      {"lp4-plane/translate-xy", {K::hyperbolic, std::pow(2.0, 0.25)}},
      {"lp4-plane/flip-y", {K::elliptic, 0.0}},
      {"lp4-plane/flip-x", {K::elliptic, 0.0}},
      {"lp4-plane/glide", {K::hyperbolic, 3.0}},
      {"lp4-plane/rotate-90", {K::elliptic, 0.0}},
      {"lp4-plane/point-reflection", {K::elliptic, 0.0}},
      {"hyperbolic/dilate-4", {K::hyperbolic, ln4}},
      {"hyperbolic/contract-4", {K::hyperbolic, ln4}},
      {"hyperbolic/shift-1", {K::parabolic, 0.0}},
      {"hyperbolic/rotate-0.3", {K::elliptic, 0.0}},
      {"hyperbolic/inversion", {K::elliptic, 0.0}},
      {"hyperbolic/tilted-hyperbolic", {K::hyperbolic, 2.0 * std::acosh(1.5)}},
      {"product-h2xr/rotate-fix", {K::elliptic, 0.0}},
      {"product-h2xr/fix-translate", {K::hyperbolic, 1.0}},
      {"product-h2xr/dilate-translate", {K::hyperbolic, std::hypot(ln4, 1.0)}},
      {"product-h2xr/shift-translate", {K::parabolic, 1.0}},
      {"product-h2xr/shift-fix", {K::parabolic, 0.0}},
      {"product-h2xr/dilate-fix", {K::hyperbolic, ln4}},
      {"product-h2xr/rotate-flip", {K::elliptic, 0.0}},
      {"product-h2xr/fix-reflect", {K::elliptic, 0.0}},
  };
}

// Trace test for Moebius maps: |tr| < 2 elliptic, = 2 parabolic (or the
// identity), > 2 hyperbolic with |f| = 2 acosh(|tr| / 2).
Expected trace_test(const Moebius& m) {
  const double tr = std::abs(m.a + m.d);
  if (tr > 2.0 + 1e-12) return {IsometryKind::hyperbolic, 2.0 * std::acosh(tr / 2.0)};
  if (tr < 2.0 - 1e-12 || (m.b == 0.0 && m.c == 0.0)) return {IsometryKind::elliptic, 0.0};
  return {IsometryKind::parabolic, 0.0};
}

Outcome isometry_catalog() {
  const auto truth = ground_truth();
  Outcome o;
  std::size_t checked = 0;
  double worst = 0.0;
  std::map<std::string, std::map<IsometryKind, int>> seen;
  for (const auto& name : kScenes) {
    const Scene sc = load_scene(scene_path(name));
    for (const auto& item : sc.isometries) {
      const std::string key = sc.name + "/" + item.name;
      const auto it = truth.find(key);
      if (it == truth.end()) {
        o.pass = false;
        o.detail += "no ground truth for " + key + "; ";
        continue;
      }
      const auto f = verify_isometry(sc.space, item.spec);
      const IsometryClass c = classify(f);
      if (f.kind() == SpaceKind::hyperbolic) {
        const Expected t = trace_test(f.moebius_part().m);
        if (t.kind != it->second.kind || std::abs(t.value - it->second.value) > 1e-12) {
          o.pass = false;
          o.detail += "trace test disagrees with table for " + key + "; ";
        }
      }
      ++checked;
      ++seen[sc.name][c.kind];
      const double err = std::abs(c.displacement - it->second.value);
      worst = std::max(worst, err);
      if (c.kind != it->second.kind || err > kCatalogTol) {
        o.pass = false;
        o.detail += key + " classified " + to_string(c.kind) + " |f| " + fmt(c.displacement) + "; ";
      }
    }
  }
  if (checked < kCatalogMinimum) o.pass = false;
  // lp-space has no parabolic isometries, so only two classes are expected there
  if (seen["lp4-plane"].size() < 2 || seen["hyperbolic"].size() < 3 || seen["product-h2xr"].size() < 3) {
    o.pass = false;
    o.detail += "catalog does not span the expected classes; ";
  }
  o.detail += std::to_string(checked) + " isometries, worst |f| error " + fmt(worst);
  return o;
}

Outcome induced_correspondence() {
  Outcome o;
  int rows = 0, violated = 0;
  bool axis_case = false, tilted_case = false, converse_case = false, parabolic_pair = false;
  bool biconditional = true;
  for (const auto& name : kScenes) {
    cli::Options opt;
    opt.scene = scene_path(name);
    std::ostringstream out, err;
    const int code = cli::cmd_induced(opt, out, err);
    if (code != cli::ok) {
      o.pass = false;
      o.detail += name + " exit " + std::to_string(code) + "; ";
    }
    const Json j = Json::parse(out.str());
    for (const auto& row : j["rows"]) {
      if (row["verdict"] == "skipped") continue;
      ++rows;
      if (row["verdict"] == "violated" || !row["violations"].empty()) ++violated;
      const std::string g = row["g"]["class"], go = row["g_omega"]["class"];
      const auto& checked = row["checked"];
      auto has = [&](const std::string& s) { return std::find(checked.begin(), checked.end(), s) != checked.end(); };
      if (!has("g semi-simple <=> g_omega semi-simple") && g != "unknown" && go != "unknown") biconditional = false;
      if (g == "hyperbolic" && row["axis_parallel"] == "yes" && go == "elliptic") axis_case = true;
      if (g == "hyperbolic" && row["axis_parallel"] == "no" && go == "hyperbolic") tilted_case = true;
      if (go == "hyperbolic" && has("g_omega hyperbolic => g hyperbolic")) converse_case = true;
      if (g == "parabolic" && go == "parabolic" && row["verdict"] == "pass") parabolic_pair = true;
    }
  }
  if (violated > 0 || !axis_case || !tilted_case || !converse_case || !parabolic_pair || !biconditional) o.pass = false;
  o.detail += std::to_string(rows) + " rows, " + std::to_string(violated) + " violated; axis=omega " +
              (axis_case ? "yes" : "no") + ", tilted " + (tilted_case ? "yes" : "no") + ", converse " +
              (converse_case ? "yes" : "no") + ", parabolic pair " + (parabolic_pair ? "yes" : "no");
  return o;
}

Outcome determinism() {
  Outcome o;
  std::size_t bytes = 0;
  for (const auto& name : kScenes) {
    for (const char* format : {"json", "csv"}) {
      cli::Options opt;
      opt.scene = scene_path(name);
      opt.format = format;
      opt.seed = 424242;
      opt.samples = 2000;
      std::ostringstream a, b, err;
      cli::cmd_verify(opt, a, err);
      cli::cmd_verify(opt, b, err);
      bytes += a.str().size();
      if (a.str() != b.str() || a.str().empty()) {
        o.pass = false;
        o.detail += name + " (" + format + ") differs; ";
      }
    }
  }
  o.detail += "6 report pairs, " + std::to_string(bytes) + " bytes each run, byte-identical";
  if (!o.pass) o.detail = "reports differ";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"busemann-certification", busemann_certification},
      {"strip-suite", strip_suite},
      {"line-space", line_space_checks},
      {"splitting", splitting},
      {"busemann-limit", busemann_limit},
      {"isometry-catalog", isometry_catalog},
      {"induced-correspondence", induced_correspondence},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
