#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "busekit/moebius.hpp"
#include "busekit/space.hpp"

namespace busekit {

/// How to pick the direction of a new line, per model.
class DirectionSpec {
 public:
  /// lp-space: a direction vector of unit norm.
  struct Vector {
    std::vector<double> components;
  };
  /// Upper half-plane: the ideal endpoints the line runs from and to.
  struct Endpoints {
    IdealPoint from;
    IdealPoint to;
  };
  /// Upper half-plane: Euclidean angle of the unit tangent at the base point.
  struct Angle {
    double radians = 0.0;
  };
  /// Product: speed weights (a_i >= 0, sum a_i^2 = 1) and one spec per
  /// factor. A factor with weight 0 stays at its base point and its spec is
  /// ignored.
  struct Weighted {
    std::vector<double> weights;
    std::vector<DirectionSpec> factors;
  };

  using Rep = std::variant<Vector, Endpoints, Angle, Weighted>;

  DirectionSpec(Vector v) : rep_(std::move(v)) {}
  DirectionSpec(Endpoints e) : rep_(e) {}
  DirectionSpec(Angle a) : rep_(a) {}
  DirectionSpec(Weighted w) : rep_(std::move(w)) {}
  DirectionSpec(std::vector<double> v) : rep_(Vector{std::move(v)}) {}

  const Rep& rep() const noexcept { return rep_; }

 private:
  Rep rep_;
};

/// A unit-speed bi-infinite geodesic in closed form.
///
/// lp-space lines are t -> base + t dir. Hyperbolic lines are t -> M(i e^t)
/// for a unit-determinant frame M. Product lines are t -> (gamma_k(w_k t))_k
/// with one track per factor.
class GeodesicLine {
 public:
  struct Lp {
    std::vector<double> base;
    std::vector<double> dir;
  };
  struct Hyperbolic {
    Moebius frame;
  };
  struct Track;
  struct Product {
    std::vector<Track> tracks;
  };
  using Rep = std::variant<Lp, Hyperbolic, Product>;

  explicit GeodesicLine(Lp rep);
  explicit GeodesicLine(Hyperbolic rep);
  explicit GeodesicLine(Product rep);

  const Rep& rep() const noexcept { return *rep_; }
  SpaceKind kind() const noexcept;

  const Lp& lp() const { return std::get<Lp>(*rep_); }
  const Hyperbolic& hyperbolic() const { return std::get<Hyperbolic>(*rep_); }
  const Product& product() const { return std::get<Product>(*rep_); }

 private:
  std::shared_ptr<const Rep> rep_;
};

struct GeodesicLine::Track {
  double weight = 0.0;
  GeodesicLine line;
};

/// Builds the line through `base` (at parameter 0) with the given direction.
/// Errors: zero or non-unit direction vector, equal ideal endpoints, a base
/// point off the geodesic spanned by the endpoints, bad product weights.
GeodesicLine make_line(const SpaceDescriptor& space, const Point& base, const DirectionSpec& dir);

/// Builds an lp line without checking the direction's norm. Used for scene
/// fixtures that are deliberately not unit speed.
GeodesicLine make_unchecked_lp_line(std::vector<double> base, std::vector<double> dir);

GeodesicLine make_product_line(const SpaceDescriptor& space, std::vector<GeodesicLine::Track> tracks);

/// Some fixed line through x; used for factors that a product line does not
/// move along.
GeodesicLine default_line(const SpaceDescriptor& space, const Point& x);

Point eval_line(const GeodesicLine& line, double t);
/// gamma^a(t) = gamma(t + a).
GeodesicLine shift_line(const GeodesicLine& line, double a);
/// gamma-bar(t) = gamma(-t).
GeodesicLine reversed_line(const GeodesicLine& line);

void validate_line(const SpaceDescriptor& space, const GeodesicLine& line);

/// Ideal endpoints of a hyperbolic line (t -> -inf, t -> +inf).
IdealPoint line_start(const GeodesicLine& line);
IdealPoint line_end(const GeodesicLine& line);

/// Largest |t| at which lines of this space can be evaluated without the
/// closed forms overflowing; bounds the sampled parallelism test.
double max_sample_parameter(const SpaceDescriptor& space);

/// d/ds d(x, line(s)). Only the sign is needed for projection, but the value
/// is exact so that products can combine factor slopes.
double distance_slope(const SpaceDescriptor& space, const Point& x, const GeodesicLine& line,
                      double s);

/// A segment sigma_{xy} of the canonical bicombing, parametrised on [0, 1].
class GeodesicSegment {
 public:
  GeodesicSegment(SpaceDescriptor space, Point from, Point to);

  Point operator()(double t) const;
  const Point& from() const noexcept { return from_; }
  const Point& to() const noexcept { return to_; }
  double length() const;

 private:
  SpaceDescriptor space_;
  Point from_;
  Point to_;
};

}  // namespace busekit
