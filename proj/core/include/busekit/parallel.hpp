#pragma once

#include <optional>

#include "busekit/checks.hpp"
#include "busekit/geodesic.hpp"
#include "busekit/minimize.hpp"

namespace busekit {

struct Projection {
  double parameter = 0.0;  // s* with y = L(s*)
  Point point;
  double distance = 0.0;
};

/// Nearest point of the line to x. The objective s -> d(x, L(s)) is convex;
/// see minimize_convex for the search. The bracket is centred at
/// options.center, which lets callers start from different brackets.
Projection project_to_line(const SpaceDescriptor& space, const Point& x, const GeodesicLine& line,
                           const MinimizeOptions& options = {});

/// Exact test per model: equal lp directions, equal ordered hyperbolic
/// endpoints, equal product weights with parallel moving factors.
bool is_parallel_structural(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta);

/// Largest T at which t -> d(gamma(t), eta(t)) can be sampled before
/// roundoff dominates, capped by max_sample_parameter.
double sample_horizon(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta);

/// (d(gamma(T), eta(T)) - d(gamma(0), eta(0))) / |T|, computed in gamma's
/// frame for hyperbolic factors.
double sampled_slope(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta, double T);

/// Bounded distance judged by sampling: both slopes at +-T, with T doubling
/// up to sample_horizon, stay below 1e-6.
bool is_parallel_sampled(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta);

/// Structural answer, cross-checked by sampling. Throws
/// inconsistent_tolerance when the two disagree.
bool is_parallel(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta);

/// Hausdorff distance of parallel lines: min_s d(gamma(0), eta(s)).
double line_hausdorff(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta);

struct Alignment {
  GeodesicLine line;  // eta shifted so eta'(0) is nearest to gamma(0)
  double shift = 0.0;
  double distance = 0.0;
};

Alignment align(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta);

/// t -> sigma(gamma(t), eta(t), tau) as a closed-form line, for parallel
/// gamma and eta (aligned or not).
GeodesicLine interpolate_parallel(const SpaceDescriptor& space, const GeodesicLine& gamma,
                                  const GeodesicLine& eta, double tau);

/// beta(t, u) = sigma(gamma(t), eta(t), u / r) between aligned parallel lines.
class StripMap {
 public:
  StripMap(SpaceDescriptor space, GeodesicLine gamma, GeodesicLine eta, double width);

  Point operator()(double t, double u) const;
  double width() const noexcept { return width_; }
  const GeodesicLine& gamma() const noexcept { return gamma_; }
  const GeodesicLine& eta() const noexcept { return eta_; }
  const SpaceDescriptor& space() const noexcept { return space_; }

 private:
  SpaceDescriptor space_;
  GeodesicLine gamma_;
  GeodesicLine eta_;
  double width_;
};

/// Aligns eta to gamma and builds the strip; width 0 when the lines coincide.
StripMap build_strip(const SpaceDescriptor& space, const GeodesicLine& gamma, const GeodesicLine& eta);

/// gamma_u = t -> beta(t, u) for 0 <= u <= r.
GeodesicLine strip_line(const StripMap& strip, double u);

/// u -> beta(t0 + lambda u, u) on [0, r] is linearly reparametrised with
/// speed d(curve(0), curve(r)) / r.
CheckReport check_strip_diagonal(const StripMap& strip, double t0, double lambda, const CheckOptions& options = {});

struct TransferReport {
  bool pass = false;
  Point y;  // nearest point of gamma2 to x
  Point z;  // nearest point of gamma3 to x
  double distance = 0.0;   // d(y, z)
  double expected = 0.0;   // H(gamma2, gamma3)
  double violation = 0.0;
};

/// For pairwise parallel lines with H13 = H12 + H23, checks that the nearest
/// points of gamma2 and gamma3 to x on gamma1 are H23 apart. Throws
/// precondition_failed when the lines are not collinear.
TransferReport collinear_transfer(const SpaceDescriptor& space, const GeodesicLine& gamma1,
                                  const GeodesicLine& gamma2, const GeodesicLine& gamma3, const Point& x,
                                  double tol = 1e-9);

/// The line parallel to omega with parameter 0 at x, if one exists.
std::optional<GeodesicLine> try_line_through(const SpaceDescriptor& space, const GeodesicLine& omega, const Point& x);
/// As above; throws not_in_x_omega when x lies on no line parallel to omega.
GeodesicLine line_through(const SpaceDescriptor& space, const GeodesicLine& omega, const Point& x);

}  // namespace busekit
