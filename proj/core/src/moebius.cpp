#include "busekit/moebius.hpp"

#include <cmath>

#include "busekit/error.hpp"

namespace busekit {

bool IdealPoint::is_infinite(double tol) const {
  return std::abs(v) <= tol * std::hypot(u, v);
}

bool IdealPoint::same_as(const IdealPoint& other, double tol) const {
  const double cross = u * other.v - other.u * v;
  return std::abs(cross) <= tol * std::hypot(u, v) * std::hypot(other.u, other.v);
}

Moebius Moebius::normalized(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw Error(Errc::not_an_isometry, "Moebius map needs a positive determinant");
  }
  const double s = 1.0 / std::sqrt(det);
  return {a * s, b * s, c * s, d * s};
}

Moebius Moebius::rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

Moebius Moebius::dilation(double s) { return {std::exp(s / 2.0), 0.0, 0.0, std::exp(-s / 2.0)}; }

Moebius Moebius::lift(std::complex<double> z) {
  const double r = std::sqrt(z.imag());
  return {r, z.real() / r, 0.0, 1.0 / r};
}

std::complex<double> Moebius::apply(std::complex<double> z) const {
  const double x = z.real();
  const double y = z.imag();
  const double p = c * x + d;
  const double q = c * y;
  const double den = p * p + q * q;
  const double re = ((a * x + b) * p + a * q * y) / den;
  const double im = det() * y / den;
  return {re, im};
}

IdealPoint Moebius::apply_ideal(const IdealPoint& p) const {
  return {a * p.u + b * p.v, c * p.u + d * p.v};
}

Moebius Moebius::operator*(const Moebius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::complex<double> cayley(std::complex<double> z) {
  const std::complex<double> i{0.0, 1.0};
  return (z - i) / (z + i);
}

}  // namespace busekit
