#pragma once

#include "busekit/busemann.hpp"
#include "busekit/parallel.hpp"

namespace busekit {

/// A line parallel to omega, shifted so that b_omega(line(0)) = 0. Two
/// LinePoints with the same image are equal up to rounding.
struct LinePoint {
  GeodesicLine line;

  Point base() const { return eval_line(line, 0.0); }
};

/// gamma shifted by b_omega(gamma(0)); throws not_parallel unless gamma is
/// parallel to omega.
LinePoint normalize_line(const SpaceDescriptor& space, const GeodesicLine& omega, const GeodesicLine& gamma);

/// Ev(gamma, t) = gamma(t).
Point ev(const LinePoint& gamma, double t);

struct EvInverse {
  LinePoint line;
  double t = 0.0;                // -b_omega(x)
  double signed_distance = 0.0;  // theta(x) d(x, line(0)); equals t
};

/// (q(x), -b_omega(x)) for x in X_omega; throws not_in_x_omega otherwise.
EvInverse ev_inverse(const SpaceDescriptor& space, const GeodesicLine& omega, const Point& x);

}  // namespace busekit
