#include "busekit/induced.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace busekit {

namespace {

int rank_of(Attainment a) {
  switch (a) {
    case Attainment::attained: return 0;
    case Attainment::not_attained: return 1;
    case Attainment::not_attained_within_budget: return 2;
    case Attainment::inconclusive: return 3;
  }
  return 3;
}

MinimalDisplacement lp_induced(const SpaceDescriptor& space, const GeodesicLine& omega, const IsometrySpec& g) {
  const auto& f = g.affine_part();
  const auto n = static_cast<Eigen::Index>(f.n);
  const double p = space.exponent();
  Eigen::MatrixXd w(n, n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) w(i, j) = f.a[i * n + j] - (i == j ? 1.0 : 0.0);
    w(i, n) = omega.lp().dir[i];
  }
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(f.b.data(), n);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(w);
  qr.setThreshold(1e-10);
  const Eigen::Index r = qr.rank();
  MinimalDisplacement out;
  out.attainment = Attainment::attained;
  if (r == n) {
    out.value = 0.0;
    out.method = "b in range(A - I) + span(omega)";
    return out;
  }
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, r);
  const Eigen::VectorXd c0 = -(q.transpose() * b);
  const Eigen::VectorXd res = b + q * c0;
  if (p == 2.0 || r == 0) {
    out.value = detail::lp_norm(std::span<const double>(res.data(), res.size()), p);
    out.method = "orthogonal residual";
    return out;
  }
  // Convex in c; the Euclidean projection is a good start and the minimizer
  // lies within a few |b| of it.
  const auto objective = [&](const std::vector<double>& c) {
    const Eigen::VectorXd v = b + q * Eigen::Map<const Eigen::VectorXd>(c.data(), r);
    return detail::lp_norm(std::span<const double>(v.data(), v.size()), p);
  };
  std::vector<double> x0(c0.data(), c0.data() + r), lo(x0), hi(x0);
  const double box = 4.0 * b.norm() + 1.0;
  for (Eigen::Index i = 0; i < r; ++i) {
    lo[i] -= box;
    hi[i] += box;
  }
  const PatternResult best = pattern_search(objective, x0, lo, hi, PatternOptions{0.25 * box, 1e-12, 200000});
  out.value = best.value;
  out.method = "lp distance to range(A - I) + span(omega)";
  return out;
}

MinimalDisplacement induced_raw(const SpaceDescriptor& space, const GeodesicLine& omega, const IsometrySpec& g) {
  switch (space.kind()) {
    case SpaceKind::lp:
      return lp_induced(space, omega, g);
    case SpaceKind::hyperbolic: {
      MinimalDisplacement out;
      out.attainment = Attainment::attained;
      out.method = "one-point line space";
      return out;
    }
    case SpaceKind::product: {
      const auto& tracks = omega.product().tracks;
      std::size_t moving = 0;
      for (const auto& t : tracks) moving += t.weight > 1e-12 ? 1 : 0;
      MinimalDisplacement out;
      if (moving != 1) {
        out.method = "several moving tracks";
        return out;
      }
      out.attainment = Attainment::attained;
      out.method = "l2 rule: fixed factors and induced moving factor";
      double sum = 0.0;
      const auto& pf = g.pair_part();
      for (std::size_t i = 0; i < tracks.size(); ++i) {
        const MinimalDisplacement m = tracks[i].weight > 1e-12
                                          ? induced_raw(space.factors()[i], tracks[i].line, pf.factors[i])
                                          : minimal_displacement(pf.factors[i]);
        sum += m.value * m.value;
        if (rank_of(m.attainment) > rank_of(out.attainment)) out.attainment = m.attainment;
      }
      out.value = std::sqrt(sum);
      return out;
    }
  }
  return {};
}

}  // namespace

LinePoint InducedMap::operator()(const LinePoint& l) const {
  const SpaceDescriptor& space = g_.space();
  GeodesicLine image = map_line(g_, l.line);
  if (foliation_ == Foliation::reversing) image = reversed_line(image);
  return normalize_line(space, omega_, image);
}

InducedMap induce_on_lines(const GeodesicLine& omega, const IsometrySpec& g) {
  const Foliation f = preserves_foliation(g, omega);
  if (f == Foliation::none) throw Error(Errc::foliation_not_preserved, "does not preserve foliation");
  return InducedMap(g, omega, f);
}

MinimalDisplacement induced_minimal_displacement(const GeodesicLine& omega, const IsometrySpec& g) {
  if (preserves_foliation(g, omega) == Foliation::none) {
    throw Error(Errc::foliation_not_preserved, "does not preserve foliation");
  }
  return induced_raw(g.space(), omega, g);
}

IsometryClass classify_induced(const GeodesicLine& omega, const IsometrySpec& g) {
  return classify_displacement(induced_minimal_displacement(omega, g), g.space().tolerances().distance);
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

InducedReport classify_induced_pair(const GeodesicLine& omega, const IsometrySpec& g) {
  const SpaceDescriptor& space = g.space();
  InducedReport r;
  r.foliation = preserves_foliation(g, omega);
  if (r.foliation == Foliation::none) throw Error(Errc::foliation_not_preserved, "does not preserve foliation");
  r.g = classify(g);
  r.induced = classify_displacement(induced_raw(space, omega, g), space.tolerances().distance);
  if (r.g.kind == IsometryKind::unknown || r.induced.kind == IsometryKind::unknown) {
    r.verdict = Verdict::inconclusive;
    r.note = "classification inconclusive";
    return r;
  }
  if (r.g.kind == IsometryKind::hyperbolic) {
    try {
      const Axis axis = find_axis(g);
      r.axis_parallel = is_parallel(space, axis.line, omega) || is_parallel(space, reversed_line(axis.line), omega);
    } catch (const Error& e) {
      r.verdict = Verdict::inconclusive;
      r.note = std::string("axis test failed: ") + e.what();
      return r;
    }
  }
  const auto check = [&](std::string name, bool applies, bool holds) {
    if (!applies) return;
    if (!holds) r.violations.push_back(name);
    r.checked.push_back(std::move(name));
  };
  const IsometryKind gk = r.g.kind;
  const IsometryKind ik = r.induced.kind;
  check("g elliptic => g_omega elliptic", gk == IsometryKind::elliptic, ik == IsometryKind::elliptic);
  check("g_omega elliptic => g semi-simple", ik == IsometryKind::elliptic, r.g.semi_simple);
  check("g hyperbolic, axis parallel => g_omega elliptic", gk == IsometryKind::hyperbolic && *r.axis_parallel,
        ik == IsometryKind::elliptic);
  check("g hyperbolic, axis not parallel => g_omega hyperbolic", gk == IsometryKind::hyperbolic && !*r.axis_parallel,
        ik == IsometryKind::hyperbolic);
  check("g_omega hyperbolic => g hyperbolic", ik == IsometryKind::hyperbolic, gk == IsometryKind::hyperbolic);
  check("g semi-simple <=> g_omega semi-simple", true, r.g.semi_simple == r.induced.semi_simple);
  if (gk == IsometryKind::parabolic && ik == IsometryKind::parabolic) {
    r.note = "parabolic/parabolic observed";
  }
  r.verdict = r.violations.empty() ? Verdict::pass : Verdict::violated;
  return r;
}

LinePoint FlatPlane::gamma(double u) const { return h_.line_at(eval_line(xi_, u / c_)); }

Point FlatPlane::operator()(double t, double u) const {
  const Alignment a = align(h_.space(), gamma0_, gamma(u).line);
  return eval_line(a.line, t);
}

FlatPlane flat_plane_map(const LineSpace& h, const GeodesicLine& xi, const Point& x) {
  const SpaceDescriptor& space = h.space();
  validate_line(space, xi);
  validate_point(space, x);
  const double tol = space.tolerances().distance;
  if (detail::distance_unchecked(space, eval_line(xi, 0.0).coords(), x.coords()) > tol * std::max(1.0, x.size() * 1.0)) {
    throw Error(Errc::precondition_failed, "flat plane needs xi(0) = x");
  }
  const double c = h.distance(h.line_at(eval_line(xi, 0.0)), h.line_at(eval_line(xi, 1.0)));
  if (!(c > tol)) throw Error(Errc::precondition_failed, "xi stays on one line of the foliation");
  return FlatPlane(h, xi, line_through(space, h.omega(), x), c);
}

CheckReport check_flat_diagonal(const FlatPlane& plane, double t0, double lambda, double r,
                                const CheckOptions& options) {
  const ModelSpace model(plane.space());
  return check_linear_geodesic(model, [&](double u) { return plane(t0 + lambda * u, u); }, -r, r, options,
                               "check_flat_diagonal");
}

}  // namespace busekit
