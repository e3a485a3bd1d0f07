#include "busekit/decomposition.hpp"

#include <cmath>

namespace busekit {

LinePoint normalize_line(const SpaceDescriptor& space, const GeodesicLine& omega, const GeodesicLine& gamma) {
  if (!is_parallel(space, gamma, omega)) throw Error(Errc::not_parallel, "line is not parallel to omega");
  // b_omega(gamma(u + s)) = b_omega(gamma(u)) - s, so one shift suffices.
  const double s = detail::busemann_closed_form(space, omega, eval_line(gamma, 0.0));
  return {shift_line(gamma, s)};
}

Point ev(const LinePoint& gamma, double t) { return eval_line(gamma.line, t); }

EvInverse ev_inverse(const SpaceDescriptor& space, const GeodesicLine& omega, const Point& x) {
  const GeodesicLine through = line_through(space, omega, x);
  EvInverse out{normalize_line(space, omega, through), -detail::busemann_closed_form(space, omega, x), 0.0};
  const Point base = out.line.base();
  const double d = distance(space, x, base);
  const double ahead = distance(space, x, eval_line(out.line.line, d));
  const double behind = distance(space, x, eval_line(out.line.line, -d));
  out.signed_distance = ahead <= behind ? d : -d;
  return out;
}

}  // namespace busekit
