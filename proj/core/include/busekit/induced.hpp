#pragma once

#include <optional>
#include <string>
#include <vector>

#include "busekit/isometry.hpp"
#include "busekit/line_space.hpp"

namespace busekit {

/// g_omega: L -> normalize(g(L)), with g(L) reversed when g reverses the
/// foliation.
class InducedMap {
 public:
  LinePoint operator()(const LinePoint& l) const;

  const IsometrySpec& map() const noexcept { return g_; }
  Foliation foliation() const noexcept { return foliation_; }
  const GeodesicLine& omega() const noexcept { return omega_; }

 private:
  InducedMap(IsometrySpec g, GeodesicLine omega, Foliation f)
      : g_(std::move(g)), omega_(std::move(omega)), foliation_(f) {}
  friend InducedMap induce_on_lines(const GeodesicLine& omega, const IsometrySpec& g);

  IsometrySpec g_;
  GeodesicLine omega_;
  Foliation foliation_;
};

/// Throws foliation_not_preserved when g maps omega to a line parallel to
/// neither omega nor its reverse.
InducedMap induce_on_lines(const GeodesicLine& omega, const IsometrySpec& g);

/// |g_omega| on the line space. lp: the lp distance from b to
/// range(A - I) + span(omega direction); one-point line spaces give 0;
/// products with one moving track combine the fixed factors' |g_i| with the
/// moving factor's induced value under the l2 rule. Products where several
/// tracks move are inconclusive.
MinimalDisplacement induced_minimal_displacement(const GeodesicLine& omega, const IsometrySpec& g);

IsometryClass classify_induced(const GeodesicLine& omega, const IsometrySpec& g);

enum class Verdict { pass, violated, inconclusive };
const char* to_string(Verdict v) noexcept;

struct InducedReport {
  Foliation foliation = Foliation::none;
  IsometryClass g;
  IsometryClass induced;
  std::optional<bool> axis_parallel;  // set when g is hyperbolic
  std::vector<std::string> checked;
  std::vector<std::string> violations;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

/// Classifies g and g_omega and checks every implication that applies:
///   g elliptic => g_omega elliptic
///   g_omega elliptic => g semi-simple
///   g hyperbolic, axis parallel to omega or its reverse => g_omega elliptic
///   g hyperbolic, axis not parallel => g_omega hyperbolic
///   g_omega hyperbolic => g hyperbolic
///   g semi-simple <=> g_omega semi-simple
/// Throws foliation_not_preserved for maps that move the foliation.
InducedReport classify_induced_pair(const GeodesicLine& omega, const IsometrySpec& g);

/// beta(t, u) = gamma_u(t), where Gamma(u) = q(xi(u / c)) is a unit-speed
/// geodesic of the line space, gamma_0 passes through x at t = 0 and gamma_u
/// is Gamma(u) aligned to gamma_0.
class FlatPlane {
 public:
  Point operator()(double t, double u) const;
  LinePoint gamma(double u) const;
  const GeodesicLine& base_line() const noexcept { return gamma0_; }
  double speed() const noexcept { return c_; }
  const SpaceDescriptor& space() const noexcept { return h_.space(); }

 private:
  FlatPlane(const LineSpace& h, GeodesicLine xi, GeodesicLine gamma0, double c)
      : h_(h), xi_(std::move(xi)), gamma0_(std::move(gamma0)), c_(c) {}
  friend FlatPlane flat_plane_map(const LineSpace& h, const GeodesicLine& xi, const Point& x);

  LineSpace h_;
  GeodesicLine xi_;
  GeodesicLine gamma0_;
  double c_;
};

/// xi is a line inside X_omega transverse to the foliation with x = xi(0).
/// Throws precondition_failed when xi(0) != x or q(xi) is constant.
FlatPlane flat_plane_map(const LineSpace& h, const GeodesicLine& xi, const Point& x);

/// u -> beta(t0 + lambda u, u) is linearly reparametrised on [-r, r].
CheckReport check_flat_diagonal(const FlatPlane& plane, double t0, double lambda, double r,
                                const CheckOptions& options = {});

}  // namespace busekit
