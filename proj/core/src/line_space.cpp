#include "busekit/line_space.hpp"

#include <cmath>

namespace busekit {

namespace {

bool single_point(const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::lp: return space.dimension() == 1;
    case SpaceKind::hyperbolic: return true;
    case SpaceKind::product: return space.factors().size() == 1 && single_point(space.factors()[0]);
  }
  return false;
}

}  // namespace

LineSpace::LineSpace(SpaceDescriptor space, GeodesicLine omega, double region_scale)
    : space_(std::move(space)), omega_(std::move(omega)), scale_(region_scale) {
  validate_line(space_, omega_);
}

LinePoint LineSpace::normalized(GeodesicLine line) const {
  const double s = detail::busemann_closed_form(space_, omega_, eval_line(line, 0.0));
  return {shift_line(line, s)};
}

double LineSpace::distance(const LinePoint& a, const LinePoint& b) const {
  return project_to_line(space_, a.base(), b.line).distance;
}

LinePoint LineSpace::geodesic(const LinePoint& a, const LinePoint& b, double u) const {
  if (u == 0.0) return a;
  if (u == 1.0) return b;
  const Projection p = project_to_line(space_, a.base(), b.line);
  return normalized(interpolate_parallel(space_, a.line, shift_line(b.line, p.parameter), u));
}

LinePoint LineSpace::sample(Rng& rng) const {
  if (is_single_point()) return omega_point();
  return line_at(random_point_in_x_omega(space_, omega_, scale_, rng));
}

std::vector<double> LineSpace::coordinates(const LinePoint& l) const {
  const Point b = l.base();
  return {b.coords().begin(), b.coords().end()};
}

std::string LineSpace::name() const { return "L_omega(" + space_.describe() + ")"; }

bool LineSpace::contains(const LinePoint& l) const {
  if (l.line.kind() != space_.kind()) return false;
  try {
    if (!is_parallel(space_, l.line, omega_)) return false;
  } catch (const Error&) {
    return false;
  }
  const double b = detail::busemann_closed_form(space_, omega_, l.base());
  return std::abs(b) <= space_.tolerances().distance * std::max(1.0, scale_);
}

bool LineSpace::is_single_point() const { return single_point(space_); }

LinePoint LineSpace::omega_point() const { return normalized(omega_); }

LinePoint LineSpace::line_at(const Point& x) const { return normalized(line_through(space_, omega_, x)); }

std::optional<SpaceDescriptor> LineSpace::factor_space() const {
  if (space_.kind() != SpaceKind::product) return std::nullopt;
  const auto& tracks = omega_.product().tracks;
  std::vector<SpaceDescriptor> rest;
  int moving = 0;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    if (tracks[i].weight > 0.0) {
      ++moving;
      if (!single_point(space_.factors()[i])) return std::nullopt;
    } else {
      rest.push_back(space_.factors()[i]);
    }
  }
  if (moving != 1 || rest.empty()) return std::nullopt;
  if (rest.size() == 1) return rest.front();
  return SpaceDescriptor::product(std::move(rest), space_.tolerances());
}

Point LineSpace::to_factor(const LinePoint& l) const {
  if (!factor_space()) throw Error(Errc::invalid_space, "line space has no factor identification");
  const auto& tracks = l.line.product().tracks;
  std::vector<double> out;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    if (omega_.product().tracks[i].weight > 0.0) continue;
    const Point a = eval_line(tracks[i].line, 0.0);
    out.insert(out.end(), a.coords().begin(), a.coords().end());
  }
  return Point(std::move(out));
}

LinePoint LineSpace::from_factor(const Point& y) const {
  const auto fs = factor_space();
  if (!fs) throw Error(Errc::invalid_space, "line space has no factor identification");
  validate_point(*fs, y);
  const auto& tracks = omega_.product().tracks;
  std::vector<Point> parts;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    const auto& f = space_.factors()[i];
    if (tracks[i].weight > 0.0) {
      parts.push_back(eval_line(tracks[i].line, 0.0));
    } else {
      const auto c = y.coords().subspan(offset, f.arity());
      parts.emplace_back(std::vector<double>(c.begin(), c.end()));
      offset += f.arity();
    }
  }
  return line_at(join_factors(space_, parts));
}

LineSpace build_line_space(const SpaceDescriptor& space, const GeodesicLine& omega, double region_scale) {
  return LineSpace(space, omega, region_scale);
}

double linespace_distance(const LineSpace& h, const LinePoint& a, const LinePoint& b) {
  if (!h.contains(a) || !h.contains(b)) {
    throw Error(Errc::not_in_x_omega, "line is not a normalized line parallel to omega");
  }
  return line_hausdorff(h.space(), a.line, b.line);
}

LinePoint linespace_bicombing(const LineSpace& h, const LinePoint& a, const LinePoint& b, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw Error(Errc::invalid_parameter, "bicombing parameter must lie in [0,1]");
  if (!is_parallel(h.space(), a.line, b.line)) throw Error(Errc::not_parallel, "lines are not parallel");
  return h.geodesic(a, b, u);
}

CheckReport check_sigma_in_Sigma(const LineSpace& h, const LinePoint& l1, const LinePoint& l2, const Point& x1,
                                 const Point& x2, const CheckOptions& options) {
  const auto& space = h.space();
  const double tol = space.tolerances().distance;
  if (project_to_line(space, x1, l1.line).distance > tol || project_to_line(space, x2, l2.line).distance > tol) {
    throw Error(Errc::precondition_failed, "points do not lie on the given lines");
  }
  Rng rng(options.seed);
  detail::WorstCase worst("check_sigma_in_Sigma", options);
  const double scale = distance(space, x1, x2);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const double t = rng.unit();
    const Point p = bicombing_point(space, x1, x2, t);
    const LinePoint line = h.geodesic(l1, l2, t);
    const double d = project_to_line(space, p, line.line).distance;
    worst.record(d, scale, [&] {
      return std::vector<Witness>{{"t", {t}}, {"sigma(t)", h.coordinates(LinePoint{line.line})}, {"x", {p.coords().begin(), p.coords().end()}}};
    });
  }
  return worst.finish();
}

CheckReport certify_linespace_busemann(const LineSpace& h, const CheckOptions& options) {
  if (h.is_single_point()) {
    CheckReport r;
    r.property = "certify_linespace_busemann";
    r.tolerance = options.tolerance;
    r.seed = options.seed;
    return r;
  }
  std::vector<CheckReport> parts;
  parts.push_back(check_conical(h, options));
  parts.push_back(check_busemann_convexity(h, options));

  Rng rng(options.seed + 0x9e3779b97f4a7c15ULL);
  detail::WorstCase worst("check_sigma_unique", options);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const LinePoint a = h.sample(rng);
    const LinePoint b = h.sample(rng);
    const double shift_a = rng.uniform(-h.region_scale(), h.region_scale());
    const double shift_b = rng.uniform(-h.region_scale(), h.region_scale());
    const double u = rng.unit();
    const double r = h.distance(a, b);
    const LinePoint mid = h.geodesic(a, b, 0.5);
    const double midpoint_gap =
        std::max(std::abs(h.distance(a, mid) - 0.5 * r), std::abs(h.distance(mid, b) - 0.5 * r));
    const LinePoint direct = h.geodesic(a, b, u);
    const LinePoint shifted = h.geodesic(LinePoint{shift_line(a.line, shift_a)}, LinePoint{shift_line(b.line, shift_b)}, u);
    const double rep_gap = h.distance(direct, shifted);
    worst.record(std::max(midpoint_gap, rep_gap), r, [&] {
      return std::vector<Witness>{{"a", h.coordinates(a)},       {"b", h.coordinates(b)}, {"u", {u}},
                                  {"shifts", {shift_a, shift_b}}, {"midpoint_gap", {midpoint_gap}},
                                  {"representative_gap", {rep_gap}}};
    });
  }
  parts.push_back(worst.finish());
  return combine_reports("certify_linespace_busemann", std::move(parts));
}

}  // namespace busekit
