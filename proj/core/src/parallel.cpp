#include "busekit/parallel.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>

namespace busekit {

namespace {

constexpr double kSlopeThreshold = 1e-6;

Point anchor(const GeodesicLine& line) { return eval_line(line, 0.0); }

// d(gamma(s), eta(t)); hyperbolic factors are evaluated in gamma's frame so
// that large parameters do not lose the separation to cancellation.
double gap(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta, double s, double t) {
  switch (space.kind()) {
    case SpaceKind::lp:
      return detail::distance_unchecked(space, eval_line(gamma, s).coords(), eval_line(eta, t).coords());
    case SpaceKind::hyperbolic: {
      const Moebius n = gamma.hyperbolic().frame.inverse() * eta.hyperbolic().frame;
      const std::complex<double> z1{0.0, std::exp(s)};
      const std::complex<double> z2 = (n * Moebius::dilation(t)).apply({0.0, 1.0});
      return detail::hyperbolic_distance(z1, z2);
    }
    case SpaceKind::product: {
      const auto& pg = gamma.product();
      const auto& pe = eta.product();
      double sum = 0.0;
      for (std::size_t i = 0; i < pg.tracks.size(); ++i) {
        const double d = gap(space.factors()[i], pg.tracks[i].line, pe.tracks[i].line, pg.tracks[i].weight * s,
                             pe.tracks[i].weight * t);
        sum += d * d;
      }
      return std::sqrt(sum);
    }
  }
  return 0.0;
}

}  // namespace

Projection project_to_line(const SpaceDescriptor& space, const Point& x, const GeodesicLine& line,
                           const MinimizeOptions& options) {
  validate_point(space, x);
  validate_line(space, line);
  const auto f = [&](double s) { return detail::distance_unchecked(space, x.coords(), eval_line(line, s).coords()); };
  const auto g = [&](double s) { return distance_slope(space, x, line, s); };
  const ScalarMinimum m = minimize_convex(f, options, g);
  Projection p;
  p.parameter = m.x;
  p.point = eval_line(line, m.x);
  p.distance = m.value;
  return p;
}

bool is_parallel_structural(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta) {
  validate_line(space, gamma);
  validate_line(space, eta);
  const double tol = space.tolerances().distance;
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto& a = gamma.lp().dir;
      const auto& b = eta.lp().dir;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) return false;
      }
      return true;
    }
    case SpaceKind::hyperbolic:
      return line_start(gamma).same_as(line_start(eta), tol) && line_end(gamma).same_as(line_end(eta), tol);
    case SpaceKind::product: {
      const auto& pg = gamma.product();
      const auto& pe = eta.product();
      for (std::size_t i = 0; i < pg.tracks.size(); ++i) {
        const double wg = pg.tracks[i].weight;
        const double we = pe.tracks[i].weight;
        if (std::abs(wg - we) > tol) return false;
        if (std::max(wg, we) > tol &&
            !is_parallel_structural(space.factors()[i], pg.tracks[i].line, pe.tracks[i].line)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

double sample_horizon(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta) {
  const double cap = max_sample_parameter(space);
  switch (space.kind()) {
    case SpaceKind::lp:
      return cap;
    case SpaceKind::hyperbolic: {
      // An entry error e of the relative frame moves the far sample by about
      // e * e^T; keep that well below the slope threshold.
      const Moebius n = gamma.hyperbolic().frame.inverse() * eta.hyperbolic().frame;
      const double size = std::abs(n.a) + std::abs(n.b) + std::abs(n.c) + std::abs(n.d);
      const double noise = 8.0 * DBL_EPSILON * size * size;
      double T = 1.0;
      while (2.0 * T <= cap && noise * std::exp(2.0 * T) <= 1e-3 * kSlopeThreshold * 2.0 * T) T *= 2.0;
      return T;
    }
    case SpaceKind::product: {
      const auto& pg = gamma.product();
      const auto& pe = eta.product();
      double T = cap;
      for (std::size_t i = 0; i < pg.tracks.size(); ++i) {
        const double w = std::max(pg.tracks[i].weight, pe.tracks[i].weight);
        if (w <= 0.0) continue;
        T = std::min(T, sample_horizon(space.factors()[i], pg.tracks[i].line, pe.tracks[i].line) / w);
      }
      return std::max(T, 1.0);
    }
  }
  return 1.0;
}

double sampled_slope(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta, double T) {
  const double d0 = gap(space, gamma, eta, 0.0, 0.0);
  const double up = (gap(space, gamma, eta, T, T) - d0) / std::abs(T);
  const double down = (gap(space, gamma, eta, -T, -T) - d0) / std::abs(T);
  return std::max(up, down);
}

bool is_parallel_sampled(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta) {
  validate_line(space, gamma);
  validate_line(space, eta);
  const double horizon = sample_horizon(space, gamma, eta);
  for (double T = 1.0; T <= horizon; T *= 2.0) {
    const double s = sampled_slope(space, gamma, eta, T);
    if (!(s <= kSlopeThreshold)) return false;
  }
  return true;
}

bool is_parallel(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta) {
  const bool structural = is_parallel_structural(space, gamma, eta);
  const bool sampled = is_parallel_sampled(space, gamma, eta);
  if (structural != sampled) {
    std::ostringstream msg;
    msg << "parallelism test disagrees with sampling (structural " << structural << ", sampled " << sampled
        << "); tolerance " << space.tolerances().distance << " is misconfigured for these lines";
    throw Error(Errc::inconsistent_tolerance, msg.str());
  }
  return structural;
}

double line_hausdorff(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta) {
  return align(space, gamma, eta).distance;
}

Alignment align(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta) {
  if (!is_parallel(space, gamma, eta)) throw Error(Errc::not_parallel, "lines are not parallel");
  const Projection p = project_to_line(space, anchor(gamma), eta);
  return {shift_line(eta, p.parameter), p.parameter, p.distance};
}

GeodesicLine interpolate_parallel(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta,
                                  double tau) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto& g = gamma.lp();
      const auto& e = eta.lp();
      std::vector<double> base(g.base.size());
      for (std::size_t i = 0; i < base.size(); ++i) base[i] = g.base[i] + tau * (e.base[i] - g.base[i]);
      return GeodesicLine(GeodesicLine::Lp{std::move(base), g.dir});
    }
    case SpaceKind::hyperbolic: {
      // eta(t) = gamma(t + c) for parallel lines.
      const std::complex<double> w = gamma.hyperbolic().frame.inverse().apply(as_complex(anchor(eta)));
      return shift_line(gamma, tau * std::log(std::abs(w)));
    }
    case SpaceKind::product: {
      const auto& pg = gamma.product();
      const auto& pe = eta.product();
      std::vector<GeodesicLine::Track> tracks;
      for (std::size_t i = 0; i < pg.tracks.size(); ++i) {
        const auto& f = space.factors()[i];
        if (pg.tracks[i].weight > 0.0) {
          tracks.push_back(
              {pg.tracks[i].weight, interpolate_parallel(f, pg.tracks[i].line, pe.tracks[i].line, tau)});
        } else {
          const Point p = bicombing_point(f, anchor(pg.tracks[i].line), anchor(pe.tracks[i].line), tau);
          tracks.push_back({0.0, default_line(f, p)});
        }
      }
      return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

StripMap::StripMap(SpaceDescriptor space, GeodesicLine gamma, GeodesicLine eta, double width)
    : space_(std::move(space)), gamma_(std::move(gamma)), eta_(std::move(eta)), width_(width) {}

Point StripMap::operator()(double t, double u) const {
  if (width_ == 0.0) return eval_line(gamma_, t);
  if (!(u >= 0.0 && u <= width_)) throw Error(Errc::invalid_parameter, "strip offset outside [0, r]");
  return bicombing_point(space_, eval_line(gamma_, t), eval_line(eta_, t), std::min(1.0, u / width_));
}

StripMap build_strip(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta) {
  Alignment a = align(space, gamma, eta);
  if (a.distance <= space.tolerances().distance) return StripMap(space, gamma, gamma, 0.0);
  return StripMap(space, gamma, std::move(a.line), a.distance);
}

GeodesicLine strip_line(const StripMap& strip, double u) {
  const double r = strip.width();
  if (!(u >= 0.0 && u <= r)) throw Error(Errc::invalid_parameter, "strip offset outside [0, r]");
  if (r == 0.0 || u == 0.0) return strip.gamma();
  if (u == r) return strip.eta();
  return interpolate_parallel(strip.space(), strip.gamma(), strip.eta(), u / r);
}

CheckReport check_strip_diagonal(const StripMap& strip, double t0, double lambda, const CheckOptions& options) {
  if (strip.width() == 0.0) {
    CheckReport r;
    r.property = "check_strip_diagonal";
    r.tolerance = options.tolerance;
    r.seed = options.seed;
    return r;
  }
  const ModelSpace model(strip.space());
  return check_linear_geodesic(
      model, [&](double u) { return strip(t0 + lambda * u, u); }, 0.0, strip.width(), options,
      "check_strip_diagonal");
}

TransferReport collinear_transfer(const SpaceDescriptor& space, const GeodesicLine& gamma1,
                                  const GeodesicLine& gamma2, const GeodesicLine& gamma3, const Point& x,
                                  double tol) {
  const double h12 = line_hausdorff(space, gamma1, gamma2);
  const double h23 = line_hausdorff(space, gamma2, gamma3);
  const double h13 = line_hausdorff(space, gamma1, gamma3);
  if (!lengths_close(h13, h12 + h23, tol)) {
    throw Error(Errc::precondition_failed, "lines are not collinear: H13 != H12 + H23");
  }
  if (project_to_line(space, x, gamma1).distance > tol * std::max(1.0, h13)) {
    throw Error(Errc::precondition_failed, "x does not lie on the first line");
  }
  TransferReport r;
  r.y = project_to_line(space, x, gamma2).point;
  r.z = project_to_line(space, x, gamma3).point;
  r.distance = distance(space, r.y, r.z);
  r.expected = h23;
  r.violation = std::abs(r.distance - h23) / std::max(1.0, h23);
  r.pass = r.violation <= tol;
  return r;
}

std::optional<GeodesicLine> try_line_through(const SpaceDescriptor& space, const GeodesicLine& omega,
                                             const Point& x) {
  validate_point(space, x);
  validate_line(space, omega);
  switch (space.kind()) {
    case SpaceKind::lp:
      return GeodesicLine(GeodesicLine::Lp{{x.coords().begin(), x.coords().end()}, omega.lp().dir});
    case SpaceKind::hyperbolic: {
      const std::complex<double> w = omega.hyperbolic().frame.inverse().apply(as_complex(x));
      const double off = std::asinh(std::abs(w.real()) / w.imag());
      if (off > space.tolerances().distance) return std::nullopt;
      return shift_line(omega, std::log(std::abs(w)));
    }
    case SpaceKind::product: {
      const auto& p = omega.product();
      std::vector<GeodesicLine::Track> tracks;
      for (std::size_t i = 0; i < p.tracks.size(); ++i) {
        const auto& f = space.factors()[i];
        const Point xi = factor_point(space, x, i);
        if (p.tracks[i].weight > 0.0) {
          auto li = try_line_through(f, p.tracks[i].line, xi);
          if (!li) return std::nullopt;
          tracks.push_back({p.tracks[i].weight, std::move(*li)});
        } else {
          tracks.push_back({0.0, default_line(f, xi)});
        }
      }
      return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
    }
  }
  return std::nullopt;
}

GeodesicLine line_through(const SpaceDescriptor& space, const GeodesicLine& omega, const Point& x) {
  auto line = try_line_through(space, omega, x);
  if (!line) throw Error(Errc::not_in_x_omega, "point lies on no line parallel to omega");
  return std::move(*line);
}

}  // namespace busekit
