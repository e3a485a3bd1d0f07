#pragma once

#include "busekit/geodesic.hpp"

namespace busekit {

struct LimitOptions {
  double initial_t = 1.0;
  int max_doublings = 60;
  double tolerance = 1e-8;  // on successive differences
};

struct LimitDiagnostics {
  double value = 0.0;   // last evaluated d(x, eta(t)) - t
  double gap = 0.0;     // |last - previous|
  double last_t = 0.0;
  int doublings = 0;
  bool converged = false;
  bool monotone = true;  // the sequence never increased beyond rounding
};

/// b_eta(x) = lim (d(x, eta(t)) - t) for a reference line eta.
///
/// value() uses the closed forms: lp gives the dual pairing -<J(dir), x - base>,
/// the hyperbolic plane gives -ln Im(M^{-1} x) for the frame M of eta, products
/// combine factors with the speed weights. limit() evaluates the defining
/// sequence at t0, 2 t0, 4 t0, ... with the excess computed in a form that
/// does not cancel for large t.
class BusemannEvaluator {
 public:
  BusemannEvaluator(SpaceDescriptor space, GeodesicLine eta, LimitOptions options = {});

  double value(const Point& x) const;
  LimitDiagnostics limit(const Point& x) const;
  /// d(x, eta(t)) - t.
  double excess(const Point& x, double t) const;

  const LimitDiagnostics& last_diagnostics() const noexcept { return last_; }
  const GeodesicLine& line() const noexcept { return eta_; }
  const SpaceDescriptor& space() const noexcept { return space_; }
  const LimitOptions& options() const noexcept { return options_; }

 private:
  SpaceDescriptor space_;
  GeodesicLine eta_;
  LimitOptions options_;
  mutable LimitDiagnostics last_;
};

double busemann_value(const BusemannEvaluator& b, const Point& x);

namespace detail {
double busemann_closed_form(const SpaceDescriptor& space, const GeodesicLine& eta, const Point& x);
double busemann_excess(const SpaceDescriptor& space, const GeodesicLine& eta, const Point& x, double t);
}  // namespace detail

}  // namespace busekit
