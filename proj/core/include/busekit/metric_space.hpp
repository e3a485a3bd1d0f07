#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "busekit/random.hpp"
#include "busekit/space.hpp"

namespace busekit {

/// What the sampling certifiers need from a metric space: a metric, a
/// bicombing, a sampler and a way to print points.
template <class S>
concept MetricModel = requires(const S& s, const typename S::point_type& p, Rng& rng) {
  typename S::point_type;
  { s.distance(p, p) } -> std::convertible_to<double>;
  { s.geodesic(p, p, 0.5) } -> std::convertible_to<typename S::point_type>;
  { s.sample(rng) } -> std::convertible_to<typename S::point_type>;
  { s.coordinates(p) } -> std::convertible_to<std::vector<double>>;
  { s.name() } -> std::convertible_to<std::string>;
};

/// A model space with its canonical bicombing, sampled from a region.
class ModelSpace {
 public:
  using point_type = Point;

  explicit ModelSpace(SpaceDescriptor space, double region_scale = 10.0)
      : space_(std::move(space)), scale_(region_scale) {}

  double distance(const Point& x, const Point& y) const {
    return detail::distance_unchecked(space_, x.coords(), y.coords());
  }
  Point geodesic(const Point& x, const Point& y, double t) const {
    return bicombing_point(space_, x, y, t);
  }
  Point sample(Rng& rng) const { return random_point(space_, scale_, rng); }
  std::vector<double> coordinates(const Point& x) const { return {x.coords().begin(), x.coords().end()}; }
  std::string name() const { return space_.describe(); }

  const SpaceDescriptor& descriptor() const noexcept { return space_; }
  double region_scale() const noexcept { return scale_; }

 private:
  SpaceDescriptor space_;
  double scale_;
};

static_assert(MetricModel<ModelSpace>);

}  // namespace busekit
