#include "busekit/geodesic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace busekit {

namespace {

constexpr double kUnitNormTol = 1e-9;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Moebius hyperbolic_frame_from_endpoints(const Point& base, const IdealPoint& from,
                                        const IdealPoint& to, double tol) {
  // Columns are the images of infinity and 0; each may be rescaled freely.
  double a = to.u, c = to.v, b = from.u, d = from.v;
  const double det = a * d - b * c;
  if (std::abs(det) <= 1e-12 * std::hypot(a, c) * std::hypot(b, d)) {
    throw Error(Errc::invalid_direction, "ideal endpoints equal");
  }
  if (det < 0.0) {
    a = -a;
    c = -c;
  }
  const Moebius normal = Moebius::normalized(a, b, c, d);
  const std::complex<double> w = normal.inverse().apply(as_complex(base));
  // In the standard frame the line is the imaginary axis; the nearest point
  // to w on it is i|w|.
  const double offset = std::asinh(std::abs(w.real()) / w.imag());
  if (offset > tol * std::max(1.0, std::abs(w))) {
    throw Error(Errc::invalid_direction, "base point is not on the geodesic with the given endpoints");
  }
  return normal * Moebius::dilation(std::log(std::abs(w)));
}

}  // namespace

GeodesicLine::GeodesicLine(Lp rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}
GeodesicLine::GeodesicLine(Hyperbolic rep) : rep_(std::make_shared<const Rep>(rep)) {}
GeodesicLine::GeodesicLine(Product rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}

SpaceKind GeodesicLine::kind() const noexcept {
  switch (rep_->index()) {
    case 0: return SpaceKind::lp;
    case 1: return SpaceKind::hyperbolic;
    default: return SpaceKind::product;
  }
}

GeodesicLine make_unchecked_lp_line(std::vector<double> base, std::vector<double> dir) {
  if (base.size() != dir.size()) {
    throw Error(Errc::dimension_mismatch, "base and direction sizes differ");
  }
  return GeodesicLine(GeodesicLine::Lp{std::move(base), std::move(dir)});
}

GeodesicLine make_line(const SpaceDescriptor& space, const Point& base, const DirectionSpec& dir) {
  validate_point(space, base);
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto* v = std::get_if<DirectionSpec::Vector>(&dir.rep());
      if (!v) throw Error(Errc::invalid_direction, "lp-space lines need a direction vector");
      if (v->components.size() != space.arity()) {
        throw Error(Errc::dimension_mismatch, "direction vector has the wrong dimension");
      }
      const double norm = detail::lp_norm(v->components, space.exponent());
      if (norm == 0.0) throw Error(Errc::invalid_direction, "zero direction");
      if (std::abs(norm - 1.0) > kUnitNormTol) {
        std::ostringstream msg;
        msg << "direction must have unit l" << space.exponent() << " norm (got " << norm << ")";
        throw Error(Errc::invalid_direction, msg.str());
      }
      // Rescale so the stored direction is unit up to rounding.
      std::vector<double> unit = v->components;
      for (double& x : unit) x /= norm;
      const auto c = base.coords();
      return GeodesicLine(GeodesicLine::Lp{{c.begin(), c.end()}, std::move(unit)});
    }
    case SpaceKind::hyperbolic: {
      if (const auto* e = std::get_if<DirectionSpec::Endpoints>(&dir.rep())) {
        return GeodesicLine(GeodesicLine::Hyperbolic{hyperbolic_frame_from_endpoints(
            base, e->from, e->to, space.tolerances().distance)});
      }
      if (const auto* a = std::get_if<DirectionSpec::Angle>(&dir.rep())) {
        // Rotation by theta about i turns tangents by -2 theta.
        const double theta = (std::numbers::pi / 2.0 - a->radians) / 2.0;
        return GeodesicLine(GeodesicLine::Hyperbolic{Moebius::lift(as_complex(base)) *
                                                     Moebius::rotation(theta)});
      }
      throw Error(Errc::invalid_direction, "hyperbolic lines need ideal endpoints or a tangent angle");
    }
    case SpaceKind::product: {
      const auto* w = std::get_if<DirectionSpec::Weighted>(&dir.rep());
      if (!w) throw Error(Errc::invalid_direction, "product lines need weighted factor directions");
      const auto& factors = space.factors();
      if (w->weights.size() != factors.size() || w->factors.size() != factors.size()) {
        throw Error(Errc::dimension_mismatch, "one weight and direction per factor required");
      }
      std::vector<GeodesicLine::Track> tracks;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const Point fb = factor_point(space, base, i);
        const double wi = w->weights[i];
        if (wi == 0.0) {
          tracks.push_back({0.0, default_line(factors[i], fb)});
        } else {
          tracks.push_back({wi, make_line(factors[i], fb, w->factors[i])});
        }
      }
      return make_product_line(space, std::move(tracks));
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

GeodesicLine make_product_line(const SpaceDescriptor& space, std::vector<GeodesicLine::Track> tracks) {
  validate_line(space, GeodesicLine(GeodesicLine::Product{tracks}));
  double sum = 0.0;
  for (const auto& t : tracks) sum += t.weight * t.weight;
  const double norm = std::sqrt(sum);
  for (auto& t : tracks) t.weight /= norm;
  return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
}

GeodesicLine default_line(const SpaceDescriptor& space, const Point& x) {
  validate_point(space, x);
  switch (space.kind()) {
    case SpaceKind::lp: {
      std::vector<double> dir(space.arity(), 0.0);
      dir[0] = 1.0;
      const auto c = x.coords();
      return GeodesicLine(GeodesicLine::Lp{{c.begin(), c.end()}, std::move(dir)});
    }
    case SpaceKind::hyperbolic:
      return GeodesicLine(GeodesicLine::Hyperbolic{Moebius::lift(as_complex(x))});
    case SpaceKind::product: {
      std::vector<GeodesicLine::Track> tracks;
      for (std::size_t i = 0; i < space.factors().size(); ++i) {
        tracks.push_back({i == 0 ? 1.0 : 0.0,
                          default_line(space.factors()[i], factor_point(space, x, i))});
      }
      return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

Point eval_line(const GeodesicLine& line, double t) {
  return std::visit(
      Overloaded{
          [t](const GeodesicLine::Lp& l) {
            std::vector<double> out(l.base.size());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = l.base[i] + t * l.dir[i];
            return Point(std::move(out));
          },
          [t](const GeodesicLine::Hyperbolic& h) {
            return from_complex((h.frame * Moebius::dilation(t)).apply({0.0, 1.0}));
          },
          [t](const GeodesicLine::Product& p) {
            std::vector<double> out;
            for (const auto& track : p.tracks) {
              const Point f = eval_line(track.line, track.weight * t);
              out.insert(out.end(), f.coords().begin(), f.coords().end());
            }
            return Point(std::move(out));
          },
      },
      line.rep());
}

GeodesicLine shift_line(const GeodesicLine& line, double a) {
  return std::visit(
      Overloaded{
          [a](const GeodesicLine::Lp& l) {
            auto base = l.base;
            for (std::size_t i = 0; i < base.size(); ++i) base[i] += a * l.dir[i];
            return GeodesicLine(GeodesicLine::Lp{std::move(base), l.dir});
          },
          [a](const GeodesicLine::Hyperbolic& h) {
            return GeodesicLine(GeodesicLine::Hyperbolic{h.frame * Moebius::dilation(a)});
          },
          [a](const GeodesicLine::Product& p) {
            std::vector<GeodesicLine::Track> tracks;
            for (const auto& track : p.tracks) {
              tracks.push_back({track.weight, shift_line(track.line, track.weight * a)});
            }
            return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
          },
      },
      line.rep());
}

GeodesicLine reversed_line(const GeodesicLine& line) {
  return std::visit(
      Overloaded{
          [](const GeodesicLine::Lp& l) {
            auto dir = l.dir;
            for (double& d : dir) d = -d;
            return GeodesicLine(GeodesicLine::Lp{l.base, std::move(dir)});
          },
          [](const GeodesicLine::Hyperbolic& h) {
            // i e^{-t} = -1 / (i e^t)
            return GeodesicLine(GeodesicLine::Hyperbolic{h.frame * Moebius{0.0, -1.0, 1.0, 0.0}});
          },
          [](const GeodesicLine::Product& p) {
            std::vector<GeodesicLine::Track> tracks;
            for (const auto& track : p.tracks) {
              tracks.push_back({track.weight, reversed_line(track.line)});
            }
            return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
          },
      },
      line.rep());
}

void validate_line(const SpaceDescriptor& space, const GeodesicLine& line) {
  if (line.kind() != space.kind()) {
    throw Error(Errc::dimension_mismatch, "line does not belong to " + space.describe());
  }
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto& l = line.lp();
      if (l.base.size() != space.arity() || l.dir.size() != space.arity()) {
        throw Error(Errc::dimension_mismatch, "line dimension does not match " + space.describe());
      }
      return;
    }
    case SpaceKind::hyperbolic:
      return;
    case SpaceKind::product: {
      const auto& p = line.product();
      if (p.tracks.size() != space.factors().size()) {
        throw Error(Errc::dimension_mismatch, "product line needs one track per factor");
      }
      double sum = 0.0;
      for (std::size_t i = 0; i < p.tracks.size(); ++i) {
        const double w = p.tracks[i].weight;
        if (!(w >= 0.0) || !std::isfinite(w)) {
          throw Error(Errc::invalid_direction, "track weights must be nonnegative");
        }
        sum += w * w;
        validate_line(space.factors()[i], p.tracks[i].line);
      }
      if (std::abs(sum - 1.0) > kUnitNormTol) {
        throw Error(Errc::invalid_direction, "track weights must satisfy sum w^2 = 1");
      }
      return;
    }
  }
}

IdealPoint line_start(const GeodesicLine& line) {
  const auto& m = line.hyperbolic().frame;
  return {m.b, m.d};
}

IdealPoint line_end(const GeodesicLine& line) {
  const auto& m = line.hyperbolic().frame;
  return {m.a, m.c};
}

double max_sample_parameter(const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::lp: return std::ldexp(1.0, 40);
    case SpaceKind::hyperbolic: return 256.0;
    case SpaceKind::product: {
      double m = std::ldexp(1.0, 40);
      for (const auto& f : space.factors()) m = std::min(m, max_sample_parameter(f));
      return m;
    }
  }
  return 1.0;
}

double distance_slope(const SpaceDescriptor& space, const Point& x, const GeodesicLine& line,
                      double s) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto& l = line.lp();
      const double p = space.exponent();
      std::vector<double> w(l.base.size());
      double scale = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = x[i] - (l.base[i] + s * l.dir[i]);
        scale = std::max(scale, std::abs(w[i]));
      }
      if (scale == 0.0) return 0.0;
      double num = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const double r = w[i] / scale;
        num -= std::copysign(std::pow(std::abs(r), p - 1.0), r) * l.dir[i];
      }
      for (double& c : w) c /= scale;
      return num / std::pow(detail::lp_norm(w, p), p - 1.0);
    }
    case SpaceKind::hyperbolic: {
      const std::complex<double> w = line.hyperbolic().frame.inverse().apply(as_complex(x));
      const double d = detail::hyperbolic_distance(w, {0.0, std::exp(s)});
      if (d == 0.0) return 0.0;
      // (e^{2s} - |w|^2) / (2 Im w e^s sinh d) = |w| sinh(s - ln|w|) / (Im w sinh d)
      const double rho = std::abs(w);
      const double u = s - std::log(rho);
      double ratio;
      if (d > 20.0) {
        const double au = std::abs(u);
        ratio = std::copysign(std::exp(au - d) * -std::expm1(-2.0 * au) / -std::expm1(-2.0 * d), u);
      } else {
        ratio = std::sinh(u) / std::sinh(d);
      }
      return rho / w.imag() * ratio;
    }
    case SpaceKind::product: {
      const auto& p = line.product();
      double sum_sq = 0.0;
      double weighted = 0.0;
      for (std::size_t i = 0; i < p.tracks.size(); ++i) {
        const auto& f = space.factors()[i];
        const auto& track = p.tracks[i];
        const Point xi = factor_point(space, x, i);
        const double si = track.weight * s;
        const double di = detail::distance_unchecked(f, xi.coords(), eval_line(track.line, si).coords());
        sum_sq += di * di;
        if (track.weight > 0.0 && di > 0.0) {
          weighted += di * track.weight * distance_slope(f, xi, track.line, si);
        }
      }
      if (sum_sq == 0.0) return 0.0;
      return weighted / std::sqrt(sum_sq);
    }
  }
  return 0.0;
}

GeodesicSegment::GeodesicSegment(SpaceDescriptor space, Point from, Point to)
    : space_(std::move(space)), from_(std::move(from)), to_(std::move(to)) {
  validate_point(space_, from_);
  validate_point(space_, to_);
}

Point GeodesicSegment::operator()(double t) const { return bicombing_point(space_, from_, to_, t); }

double GeodesicSegment::length() const { return distance(space_, from_, to_); }

}  // namespace busekit
