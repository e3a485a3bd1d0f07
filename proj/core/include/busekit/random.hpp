#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "busekit/geodesic.hpp"
#include "busekit/space.hpp"

namespace busekit {

/// Seeded generator with a fixed uniform mapping, so samples are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// A point of the region of the given scale: lp coordinates in [-scale, scale];
/// hyperbolic Re z in [-scale, scale] and ln Im z in [-ln(1+scale), ln(1+scale)];
/// products sample each factor.
Point random_point(const SpaceDescriptor& space, double scale, Rng& rng);
Point random_point(const SpaceDescriptor& space, double scale, std::uint64_t seed);

/// Unit vector of the lp norm, uniform on the cube before normalization.
std::vector<double> random_direction(const SpaceDescriptor& space, Rng& rng);

GeodesicLine random_line(const SpaceDescriptor& space, double scale, Rng& rng);
/// A random line parallel to `line`.
GeodesicLine random_parallel(const SpaceDescriptor& space, const GeodesicLine& line, double scale,
                             Rng& rng);

}  // namespace busekit

namespace busekit {

/// A random point on some line parallel to omega.
Point random_point_in_x_omega(const SpaceDescriptor& space, const GeodesicLine& omega, double scale, Rng& rng);

}  // namespace busekit
