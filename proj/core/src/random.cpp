#include "busekit/random.hpp"

#include <cmath>
#include <numbers>

namespace busekit {

Point random_point(const SpaceDescriptor& space, double scale, Rng& rng) {
  if (!(scale > 0.0)) throw Error(Errc::invalid_parameter, "region scale must be positive");
  switch (space.kind()) {
    case SpaceKind::lp: {
      std::vector<double> c(space.arity());
      for (double& v : c) v = rng.uniform(-scale, scale);
      return Point(std::move(c));
    }
    case SpaceKind::hyperbolic: {
      const double x = rng.uniform(-scale, scale);
      const double h = std::log1p(scale);
      return Point{x, std::exp(rng.uniform(-h, h))};
    }
    case SpaceKind::product: {
      std::vector<Point> parts;
      for (const auto& f : space.factors()) parts.push_back(random_point(f, scale, rng));
      return join_factors(space, parts);
    }
  }
  return {};
}

Point random_point(const SpaceDescriptor& space, double scale, std::uint64_t seed) {
  Rng rng(seed);
  return random_point(space, scale, rng);
}

std::vector<double> random_direction(const SpaceDescriptor& space, Rng& rng) {
  if (space.kind() != SpaceKind::lp) {
    throw Error(Errc::invalid_space, "random_direction needs an lp-space");
  }
  std::vector<double> v(space.arity());
  for (;;) {
    for (double& c : v) c = rng.uniform(-1.0, 1.0);
    const double n = detail::lp_norm(v, space.exponent());
    if (n > 0.1) {
      for (double& c : v) c /= n;
      return v;
    }
  }
}

GeodesicLine random_line(const SpaceDescriptor& space, double scale, Rng& rng) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      const Point base = random_point(space, scale, rng);
      return make_line(space, base, random_direction(space, rng));
    }
    case SpaceKind::hyperbolic: {
      const Point base = random_point(space, scale, rng);
      return make_line(space, base, DirectionSpec::Angle{rng.uniform(0.0, 2.0 * std::numbers::pi)});
    }
    case SpaceKind::product: {
      std::vector<double> w(space.factors().size());
      double sum = 0.0;
      for (double& c : w) {
        c = rng.uniform(0.05, 1.0);
        sum += c * c;
      }
      std::vector<GeodesicLine::Track> tracks;
      for (std::size_t i = 0; i < w.size(); ++i) {
        tracks.push_back({w[i] / std::sqrt(sum), random_line(space.factors()[i], scale, rng)});
      }
      return make_product_line(space, std::move(tracks));
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

GeodesicLine random_parallel(const SpaceDescriptor& space, const GeodesicLine& line, double scale,
                             Rng& rng) {
  validate_line(space, line);
  switch (space.kind()) {
    case SpaceKind::lp: {
      const Point base = random_point(space, scale, rng);
      return GeodesicLine(GeodesicLine::Lp{{base.coords().begin(), base.coords().end()}, line.lp().dir});
    }
    case SpaceKind::hyperbolic:
      // Parallel lines of the hyperbolic plane share their image.
      return shift_line(line, rng.uniform(-scale, scale));
    case SpaceKind::product: {
      std::vector<GeodesicLine::Track> tracks;
      const auto& p = line.product();
      for (std::size_t i = 0; i < p.tracks.size(); ++i) {
        const auto& f = space.factors()[i];
        if (p.tracks[i].weight > 0.0) {
          tracks.push_back({p.tracks[i].weight, random_parallel(f, p.tracks[i].line, scale, rng)});
        } else {
          tracks.push_back({0.0, default_line(f, random_point(f, scale, rng))});
        }
      }
      return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

}  // namespace busekit

namespace busekit {

Point random_point_in_x_omega(const SpaceDescriptor& space, const GeodesicLine& omega, double scale, Rng& rng) {
  validate_line(space, omega);
  switch (space.kind()) {
    case SpaceKind::lp:
      return random_point(space, scale, rng);
    case SpaceKind::hyperbolic:
      return eval_line(omega, rng.uniform(-scale, scale));
    case SpaceKind::product: {
      const auto& p = omega.product();
      std::vector<Point> parts;
      for (std::size_t i = 0; i < p.tracks.size(); ++i) {
        const auto& f = space.factors()[i];
        parts.push_back(p.tracks[i].weight > 0.0 ? random_point_in_x_omega(f, p.tracks[i].line, scale, rng)
                                                 : random_point(f, scale, rng));
      }
      return join_factors(space, parts);
    }
  }
  return {};
}

}  // namespace busekit
