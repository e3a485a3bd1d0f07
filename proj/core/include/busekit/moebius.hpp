#pragma once

#include <complex>

namespace busekit {

/// A boundary point of the upper half-plane in homogeneous coordinates:
/// the real number u/v, or infinity when v == 0.
struct IdealPoint {
  double u = 0.0;
  double v = 1.0;

  static IdealPoint finite(double x) { return {x, 1.0}; }
  static IdealPoint infinity() { return {1.0, 0.0}; }

  bool is_infinite(double tol = 0.0) const;
  double value() const { return u / v; }
  bool same_as(const IdealPoint& other, double tol) const;
};

/// z -> (a z + b) / (c z + d) with real coefficients and a d - b c = 1.
struct Moebius {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  /// Rescales to unit determinant. Throws if the determinant is not positive.
  static Moebius normalized(double a, double b, double c, double d);
  static Moebius identity() { return {}; }
  /// Elliptic rotation fixing i.
  static Moebius rotation(double theta);
  /// diag(e^{s/2}, e^{-s/2}): z -> e^s z.
  static Moebius dilation(double s);
  /// The affine map taking i to z.
  static Moebius lift(std::complex<double> z);

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  std::complex<double> apply(std::complex<double> z) const;
  IdealPoint apply_ideal(const IdealPoint& p) const;
  Moebius inverse() const { return {d, -b, -c, a}; }
  Moebius operator*(const Moebius& o) const;
};

/// Cayley map of the upper half-plane onto the unit disc, i -> 0.
std::complex<double> cayley(std::complex<double> z);

}  // namespace busekit
