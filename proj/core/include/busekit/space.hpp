#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "busekit/error.hpp"

namespace busekit {

/// A point of a model space stored as flat coordinates. The owning
/// SpaceDescriptor decides how to read them: n coordinates for lp-space,
/// (Re z, Im z) for the upper half-plane, and the concatenation of factor
/// coordinates for products.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}

  std::span<const double> coords() const noexcept { return coords_; }
  std::vector<double>& mutable_coords() noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

struct Tolerances {
  double distance = 1e-9;  // absolute-plus-relative length comparisons
  double limit = 1e-8;     // successive-difference stop for numeric limits
};

enum class SpaceKind { lp, hyperbolic, product };

const char* to_string(SpaceKind kind) noexcept;

/// Which model Busemann space a computation runs in.
///
/// lp-space is R^n with the l^p norm for 1 < p < infinity (strictly convex,
/// hence uniquely geodesic). hyperbolic is the upper half-plane. product is
/// an ordered list of factors combined by the l^2 rule
/// d((x,s),(y,t)) = sqrt(d_X(x,y)^2 + d_Y(s,t)^2).
class SpaceDescriptor {
 public:
  static SpaceDescriptor lp(int dimension, double exponent, Tolerances tol = {});
  static SpaceDescriptor hyperbolic_plane(Tolerances tol = {});
  static SpaceDescriptor product(std::vector<SpaceDescriptor> factors, Tolerances tol = {});
  /// The real line, as one-dimensional Euclidean space.
  static SpaceDescriptor real_line(Tolerances tol = {});

  SpaceKind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return dimension_; }
  double exponent() const noexcept { return exponent_; }
  const std::vector<SpaceDescriptor>& factors() const noexcept { return factors_; }
  const Tolerances& tolerances() const noexcept { return tol_; }

  /// Number of flat coordinates of a point.
  std::size_t arity() const noexcept { return arity_; }
  /// Offset of factor i inside the flat coordinates (products only).
  std::size_t factor_offset(std::size_t i) const { return offsets_.at(i); }

  SpaceDescriptor with_tolerances(Tolerances tol) const;

  std::string describe() const;

  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b);

 private:
  SpaceDescriptor() = default;

  SpaceKind kind_ = SpaceKind::lp;
  int dimension_ = 0;
  double exponent_ = 2.0;
  std::vector<SpaceDescriptor> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t arity_ = 0;
  Tolerances tol_;
};

/// Throws Error{dimension_mismatch | invalid_point} unless x belongs to space.
void validate_point(const SpaceDescriptor& space, const Point& x);
bool is_valid_point(const SpaceDescriptor& space, const Point& x) noexcept;

double distance(const SpaceDescriptor& space, const Point& x, const Point& y);

/// sigma_{xy}(t) of the canonical bicombing. Endpoints are returned exactly.
Point bicombing_point(const SpaceDescriptor& space, const Point& x, const Point& y, double t);

/// Absolute-plus-relative comparison used for every length equality.
inline bool lengths_close(double a, double b, double tol) noexcept {
  const double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
  return std::abs(a - b) <= tol * scale;
}

Point factor_point(const SpaceDescriptor& space, const Point& x, std::size_t factor);
Point join_factors(const SpaceDescriptor& space, const std::vector<Point>& parts);

inline std::complex<double> as_complex(const Point& x) { return {x[0], x[1]}; }
inline Point from_complex(std::complex<double> z) { return Point{z.real(), z.imag()}; }

namespace detail {
double distance_unchecked(const SpaceDescriptor& space, std::span<const double> x,
                          std::span<const double> y);
double lp_norm(std::span<const double> v, double p);
double hyperbolic_distance(std::complex<double> z, std::complex<double> w);
}  // namespace detail

}  // namespace busekit
