#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "busekit/geodesic.hpp"
#include "busekit/minimize.hpp"

namespace busekit {

struct VerifyOptions {
  std::size_t samples = 1000;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  double region_scale = 10.0;
};

/// An isometry in model form: x -> A x + b on lp-space, a unit-determinant
/// Moebius map on the upper half-plane, one map per factor on products.
/// Only verified specs (see verify_isometry) can be applied.
class IsometrySpec {
 public:
  struct Affine {
    std::size_t n = 0;
    std::vector<double> a;  // row-major n x n
    std::vector<double> b;
  };
  struct Mobius {
    Moebius m;
  };
  struct Pair {
    std::vector<IsometrySpec> factors;
  };
  using Rep = std::variant<Affine, Mobius, Pair>;

  static IsometrySpec affine(const std::vector<std::vector<double>>& a, std::vector<double> b);
  /// Throws not_an_isometry unless a d - b c > 0.
  static IsometrySpec moebius(double a, double b, double c, double d);
  static IsometrySpec pair(std::vector<IsometrySpec> factors);
  static IsometrySpec identity(const SpaceDescriptor& space);

  const Rep& rep() const noexcept { return *rep_; }
  SpaceKind kind() const noexcept;
  bool verified() const noexcept { return space_ != nullptr; }
  /// The space the spec was verified against; throws unverified_isometry.
  const SpaceDescriptor& space() const;

  const Affine& affine_part() const { return std::get<Affine>(*rep_); }
  const Mobius& moebius_part() const { return std::get<Mobius>(*rep_); }
  const Pair& pair_part() const { return std::get<Pair>(*rep_); }

 private:
  explicit IsometrySpec(Rep rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}

  std::shared_ptr<const Rep> rep_;
  std::shared_ptr<const SpaceDescriptor> space_;

  friend IsometrySpec verify_isometry(const SpaceDescriptor& space, const IsometrySpec& f, VerifyOptions options);
};

/// Checks d(f x, f y) = d(x, y) on sampled pairs and, for lp-space, that A is
/// a signed permutation (p != 2) or orthogonal (p = 2). Returns the spec
/// marked verified for this space; throws not_an_isometry otherwise.
IsometrySpec verify_isometry(const SpaceDescriptor& space, const IsometrySpec& f, VerifyOptions options = {});

/// Throws unverified_isometry for specs that did not pass verify_isometry.
Point apply_isometry(const IsometrySpec& f, const Point& x);
/// The image line f o L, in closed form.
GeodesicLine map_line(const IsometrySpec& f, const GeodesicLine& line);

/// d_f(x) = d(x, f(x)).
double displacement(const IsometrySpec& f, const Point& x);

enum class Attainment { attained, not_attained, not_attained_within_budget, inconclusive };
const char* to_string(Attainment a) noexcept;

struct MinimalDisplacement {
  double value = 0.0;
  std::optional<Point> argmin;
  Attainment attainment = Attainment::inconclusive;
  std::string method;
};

/// |f| = inf d_f with a minimizer when one exists, decided analytically:
/// an lp-norm minimization over b + range(A - I), the trace of a Moebius map,
/// and the l2 rule over factors.
MinimalDisplacement minimal_displacement(const IsometrySpec& f);

struct SearchOptions {
  double initial_box = 1.0;
  int max_scales = 24;
  PatternOptions pattern{0.25, 1e-9, 20000};
};

/// Derivative-free fallback in a chart (lp coordinates; (Re z, ln Im z) on
/// the half-plane). The box around the origin doubles until the minimizer is
/// interior. Never reports not_attained: a minimizing sequence that leaves
/// every box is not_attained_within_budget.
MinimalDisplacement minimal_displacement_search(const IsometrySpec& f, const SearchOptions& options = {});

enum class IsometryKind { elliptic, hyperbolic, parabolic, unknown };
const char* to_string(IsometryKind k) noexcept;

struct IsometryClass {
  IsometryKind kind = IsometryKind::unknown;
  double displacement = 0.0;
  std::optional<Point> argmin;
  Attainment attainment = Attainment::inconclusive;
  std::string witness;
  bool semi_simple = false;
};

/// elliptic: |f| = 0 attained; hyperbolic: |f| > 0 attained; parabolic: not
/// attained; unknown when the minimization was inconclusive.
IsometryClass classify_displacement(const MinimalDisplacement& m, double tol);
IsometryClass classify(const IsometrySpec& f);

struct Axis {
  GeodesicLine line;
  double translation = 0.0;  // f(line(t)) = line(t + translation)
  double residual = 0.0;     // worst sampled d(f(line(t)), line(t + translation))
};

/// An axis of a hyperbolic isometry, checked on sampled t; throws
/// not_hyperbolic for other classes and axis_check_failed when the
/// translation law fails.
Axis find_axis(const IsometrySpec& f);

enum class Foliation { direct, reversing, none };
const char* to_string(Foliation f) noexcept;

/// direct when g o omega is parallel to omega, reversing when its reverse is.
Foliation preserves_foliation(const IsometrySpec& g, const GeodesicLine& omega);

}  // namespace busekit
