#include "busekit/space.hpp"

#include <cmath>
#include <sstream>

#include "busekit/moebius.hpp"

namespace busekit {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::invalid_point: return "invalid_point";
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::invalid_space: return "invalid_space";
    case Errc::invalid_direction: return "invalid_direction";
    case Errc::not_parallel: return "not_parallel";
    case Errc::bracket_failure: return "bracket_failure";
    case Errc::limit_not_converged: return "limit_not_converged";
    case Errc::not_in_x_omega: return "not_in_x_omega";
    case Errc::unverified_isometry: return "unverified_isometry";
    case Errc::not_an_isometry: return "not_an_isometry";
    case Errc::not_hyperbolic: return "not_hyperbolic";
    case Errc::axis_check_failed: return "axis_check_failed";
    case Errc::foliation_not_preserved: return "foliation_not_preserved";
    case Errc::precondition_failed: return "precondition_failed";
    case Errc::inconsistent_tolerance: return "inconsistent_tolerance";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

const char* to_string(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::lp: return "lp";
    case SpaceKind::hyperbolic: return "hyperbolic";
    case SpaceKind::product: return "product";
  }
  return "unknown";
}

SpaceDescriptor SpaceDescriptor::lp(int dimension, double exponent, Tolerances tol) {
  if (dimension < 1) {
    throw Error(Errc::invalid_space, "lp-space dimension must be at least 1");
  }
  if (!(exponent > 1.0) || !std::isfinite(exponent)) {
    throw Error(Errc::invalid_space, "exponent out of (1,∞)");
  }
  SpaceDescriptor s;
  s.kind_ = SpaceKind::lp;
  s.dimension_ = dimension;
  s.exponent_ = exponent;
  s.arity_ = static_cast<std::size_t>(dimension);
  s.tol_ = tol;
  return s;
}

SpaceDescriptor SpaceDescriptor::hyperbolic_plane(Tolerances tol) {
  SpaceDescriptor s;
  s.kind_ = SpaceKind::hyperbolic;
  s.dimension_ = 2;
  s.arity_ = 2;
  s.tol_ = tol;
  return s;
}

SpaceDescriptor SpaceDescriptor::product(std::vector<SpaceDescriptor> factors, Tolerances tol) {
  if (factors.empty()) {
    throw Error(Errc::invalid_space, "product needs at least one factor");
  }
  SpaceDescriptor s;
  s.kind_ = SpaceKind::product;
  s.tol_ = tol;
  std::size_t offset = 0;
  int dim = 0;
  for (auto& f : factors) {
    f = f.with_tolerances(tol);
    s.offsets_.push_back(offset);
    offset += f.arity();
    dim += f.dimension();
  }
  s.arity_ = offset;
  s.dimension_ = dim;
  s.factors_ = std::move(factors);
  return s;
}

SpaceDescriptor SpaceDescriptor::real_line(Tolerances tol) { return lp(1, 2.0, tol); }

SpaceDescriptor SpaceDescriptor::with_tolerances(Tolerances tol) const {
  SpaceDescriptor s = *this;
  s.tol_ = tol;
  for (auto& f : s.factors_) f = f.with_tolerances(tol);
  return s;
}

std::string SpaceDescriptor::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case SpaceKind::lp:
      out << "l" << exponent_ << "(" << dimension_ << ")";
      break;
    case SpaceKind::hyperbolic:
      out << "H2";
      break;
    case SpaceKind::product:
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << " x ";
        out << factors_[i].describe();
      }
      break;
  }
  return out.str();
}

bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case SpaceKind::lp:
      return a.dimension_ == b.dimension_ && a.exponent_ == b.exponent_;
    case SpaceKind::hyperbolic:
      return true;
    case SpaceKind::product:
      return a.factors_ == b.factors_;
  }
  return false;
}

namespace {

bool valid_coords(const SpaceDescriptor& space, std::span<const double> x) noexcept {
  if (x.size() != space.arity()) return false;
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  switch (space.kind()) {
    case SpaceKind::lp:
      return true;
    case SpaceKind::hyperbolic:
      return x[1] > 0.0;
    case SpaceKind::product:
      for (std::size_t i = 0; i < space.factors().size(); ++i) {
        const auto& f = space.factors()[i];
        if (!valid_coords(f, x.subspan(space.factor_offset(i), f.arity()))) return false;
      }
      return true;
  }
  return false;
}

Point hyperbolic_bicombing(std::complex<double> z, std::complex<double> w, double t) {
  const double d = detail::hyperbolic_distance(z, w);
  if (d == 0.0) return from_complex(z);
  // Frame M with M(i) = z and M(i e^d) = w; the geodesic is s -> M(i e^s).
  const Moebius lift = Moebius::lift(z);
  const std::complex<double> w1 = lift.inverse().apply(w);
  const double beta = std::arg(cayley(w1));
  const Moebius frame = lift * Moebius::rotation(-beta / 2.0);
  const double s = t * d;
  return from_complex((frame * Moebius::dilation(s)).apply({0.0, 1.0}));
}

void bicombing_into(const SpaceDescriptor& space, std::span<const double> x,
                    std::span<const double> y, double t, std::span<double> out) {
  switch (space.kind()) {
    case SpaceKind::lp:
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = (1.0 - t) * x[i] + t * y[i];
      return;
    case SpaceKind::hyperbolic: {
      const Point p = hyperbolic_bicombing({x[0], x[1]}, {y[0], y[1]}, t);
      out[0] = p[0];
      out[1] = p[1];
      return;
    }
    case SpaceKind::product:
      for (std::size_t i = 0; i < space.factors().size(); ++i) {
        const auto& f = space.factors()[i];
        const std::size_t off = space.factor_offset(i);
        bicombing_into(f, x.subspan(off, f.arity()), y.subspan(off, f.arity()), t,
                       out.subspan(off, f.arity()));
      }
      return;
  }
}

}  // namespace

void validate_point(const SpaceDescriptor& space, const Point& x) {
  if (x.size() != space.arity()) {
    std::ostringstream msg;
    msg << "point has " << x.size() << " coordinates, " << space.describe() << " needs "
        << space.arity();
    throw Error(Errc::dimension_mismatch, msg.str());
  }
  if (!valid_coords(space, x.coords())) {
    throw Error(Errc::invalid_point, "point is not valid in " + space.describe() +
                                         " (non-finite coordinate or Im z <= 0)");
  }
}

bool is_valid_point(const SpaceDescriptor& space, const Point& x) noexcept {
  return valid_coords(space, x.coords());
}

namespace detail {

double lp_norm(std::span<const double> v, double p) {
  double scale = 0.0;
  for (double c : v) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double c : v) sum += std::pow(std::abs(c) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

double hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
  // arcosh(1 + |z-w|^2 / (2 Im z Im w)) rewritten through sinh(d/2) so that
  // short distances keep full relative precision.
  const double chord = std::abs(z - w);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z.imag() * w.imag())));
}

double distance_unchecked(const SpaceDescriptor& space, std::span<const double> x,
                          std::span<const double> y) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      double scale = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) scale = std::max(scale, std::abs(x[i] - y[i]));
      if (scale == 0.0) return 0.0;
      if (x.size() == 1) return scale;
      double sum = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sum += std::pow(std::abs(x[i] - y[i]) / scale, space.exponent());
      }
      return scale * std::pow(sum, 1.0 / space.exponent());
    }
    case SpaceKind::hyperbolic:
      return hyperbolic_distance({x[0], x[1]}, {y[0], y[1]});
    case SpaceKind::product: {
      double sum = 0.0;
      for (std::size_t i = 0; i < space.factors().size(); ++i) {
        const auto& f = space.factors()[i];
        const std::size_t off = space.factor_offset(i);
        const double di =
            distance_unchecked(f, x.subspan(off, f.arity()), y.subspan(off, f.arity()));
        sum += di * di;
      }
      return std::sqrt(sum);
    }
  }
  return 0.0;
}

}  // namespace detail

double distance(const SpaceDescriptor& space, const Point& x, const Point& y) {
  validate_point(space, x);
  validate_point(space, y);
  return detail::distance_unchecked(space, x.coords(), y.coords());
}

Point bicombing_point(const SpaceDescriptor& space, const Point& x, const Point& y, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(Errc::invalid_parameter, "bicombing parameter must lie in [0,1]");
  }
  validate_point(space, x);
  validate_point(space, y);
  if (t == 0.0) return x;
  if (t == 1.0) return y;
  std::vector<double> out(space.arity());
  bicombing_into(space, x.coords(), y.coords(), t, out);
  return Point(std::move(out));
}

Point factor_point(const SpaceDescriptor& space, const Point& x, std::size_t factor) {
  if (space.kind() != SpaceKind::product) {
    throw Error(Errc::invalid_space, "factor_point on a non-product space");
  }
  const auto& f = space.factors().at(factor);
  const auto c = x.coords().subspan(space.factor_offset(factor), f.arity());
  return Point(std::vector<double>(c.begin(), c.end()));
}

Point join_factors(const SpaceDescriptor& space, const std::vector<Point>& parts) {
  if (space.kind() != SpaceKind::product || parts.size() != space.factors().size()) {
    throw Error(Errc::dimension_mismatch, "join_factors: factor count mismatch");
  }
  std::vector<double> out;
  out.reserve(space.arity());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != space.factors()[i].arity()) {
      throw Error(Errc::dimension_mismatch, "join_factors: factor arity mismatch");
    }
    out.insert(out.end(), parts[i].coords().begin(), parts[i].coords().end());
  }
  return Point(std::move(out));
}

}  // namespace busekit
