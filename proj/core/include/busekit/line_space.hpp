#pragma once

#include <optional>
#include <string>

#include "busekit/checks.hpp"
#include "busekit/decomposition.hpp"

namespace busekit {

/// L_omega(R): lines parallel to omega in normalized form, with the
/// Hausdorff metric and the bicombing Sigma obtained from strips.
class LineSpace {
 public:
  using point_type = LinePoint;

  LineSpace(SpaceDescriptor space, GeodesicLine omega, double region_scale = 10.0);

  /// Hausdorff distance, without membership checks.
  double distance(const LinePoint& a, const LinePoint& b) const;
  /// Sigma_{ab}(u): align b to a, interpolate the strip at u, normalize.
  LinePoint geodesic(const LinePoint& a, const LinePoint& b, double u) const;
  /// Normalized line through a random point of X_omega.
  LinePoint sample(Rng& rng) const;
  std::vector<double> coordinates(const LinePoint& l) const;
  std::string name() const;

  bool contains(const LinePoint& l) const;
  /// True when every parallel line shares omega's image.
  bool is_single_point() const;
  LinePoint omega_point() const;

  /// The line through x parallel to omega, normalized.
  LinePoint line_at(const Point& x) const;

  /// Products whose one moving factor has a one-point line space: L_omega is
  /// the product of the remaining factors. These map between the two.
  std::optional<SpaceDescriptor> factor_space() const;
  Point to_factor(const LinePoint& l) const;
  LinePoint from_factor(const Point& y) const;

  const SpaceDescriptor& space() const noexcept { return space_; }
  const GeodesicLine& omega() const noexcept { return omega_; }
  double region_scale() const noexcept { return scale_; }

 private:
  LinePoint normalized(GeodesicLine line) const;

  SpaceDescriptor space_;
  GeodesicLine omega_;
  double scale_;
};

static_assert(MetricModel<LineSpace>);

LineSpace build_line_space(const SpaceDescriptor& space, const GeodesicLine& omega, double region_scale = 10.0);

/// Hausdorff distance of two members; throws not_in_x_omega for non-members.
double linespace_distance(const LineSpace& h, const LinePoint& a, const LinePoint& b);

/// Sigma_{ab}(u) with exact endpoints; throws invalid_parameter outside [0, 1].
LinePoint linespace_bicombing(const LineSpace& h, const LinePoint& a, const LinePoint& b, double u);

/// sigma_{x1 x2}(t) lies on the line Sigma_{L1 L2}(t) for sampled t.
CheckReport check_sigma_in_Sigma(const LineSpace& h, const LinePoint& l1, const LinePoint& l2, const Point& x1,
                                 const Point& x2, const CheckOptions& options = {});

/// Conical and convexity checks of Sigma plus uniqueness: Sigma midpoints
/// are metric midpoints and shifted representatives give the same path.
CheckReport certify_linespace_busemann(const LineSpace& h, const CheckOptions& options = {});

}  // namespace busekit
