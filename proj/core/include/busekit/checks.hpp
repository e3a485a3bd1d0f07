#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "busekit/metric_space.hpp"

namespace busekit {

struct Witness {
  std::string label;
  std::vector<double> values;
};

/// Outcome of one sampled certifier. pass holds exactly when
/// worst_violation <= tolerance; violations are excesses divided by
/// max(1, size of the quantities compared).
struct CheckReport {
  std::string property;
  bool pass = true;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  std::vector<Witness> witness;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<CheckReport> parts;
};

struct CheckOptions {
  std::size_t samples = 10000;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

/// Combines reports into one that passes iff every part passes.
CheckReport combine_reports(std::string property, std::vector<CheckReport> parts);

namespace detail {

class WorstCase {
 public:
  WorstCase(std::string property, const CheckOptions& options) {
    report_.property = std::move(property);
    report_.tolerance = options.tolerance;
    report_.seed = options.seed;
  }

  /// Records one sample; the witness builder runs only for a new worst.
  template <class Build>
  void record(double excess, double scale, Build&& build) {
    ++report_.samples;
    double v = std::max(0.0, excess) / std::max(1.0, std::abs(scale));
    if (std::isnan(excess) || std::isnan(scale)) v = std::numeric_limits<double>::infinity();
    if (first_ || v > worst_) {
      worst_ = v;
      first_ = false;
      report_.witness = build();
    }
  }

  CheckReport finish() {
    report_.worst_violation = worst_;
    report_.pass = worst_ <= report_.tolerance;
    return std::move(report_);
  }

 private:
  CheckReport report_;
  double worst_ = 0.0;
  bool first_ = true;
};

}  // namespace detail

/// |d(c(s), c(t)) - |s - t|| on sampled pairs of [a, b].
template <MetricModel S, class Curve>
CheckReport check_geodesic(const S& space, const Curve& curve, double a, double b,
                           const CheckOptions& options = {}) {
  if (options.samples < 2) throw Error(Errc::invalid_parameter, "check_geodesic needs at least 2 samples");
  Rng rng(options.seed);
  detail::WorstCase worst("check_geodesic", options);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const double s = rng.uniform(a, b);
    const double t = rng.uniform(a, b);
    const auto cs = curve(s);
    const auto ct = curve(t);
    const double d = space.distance(cs, ct);
    worst.record(std::abs(d - std::abs(s - t)), std::abs(s - t), [&] {
      return std::vector<Witness>{{"s", {s}},
                                  {"t", {t}},
                                  {"c(s)", space.coordinates(cs)},
                                  {"c(t)", space.coordinates(ct)}};
    });
  }
  return worst.finish();
}

/// Linearly reparametrised geodesic on [a, b]: d(c(u), c(v)) = k |u - v| with
/// k = d(c(a), c(b)) / (b - a).
template <MetricModel S, class Curve>
CheckReport check_linear_geodesic(const S& space, const Curve& curve, double a, double b,
                                  const CheckOptions& options = {}, std::string property = "check_linear_geodesic") {
  Rng rng(options.seed);
  detail::WorstCase worst(std::move(property), options);
  const double k = b > a ? space.distance(curve(a), curve(b)) / (b - a) : 0.0;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const double u = rng.uniform(a, b);
    const double v = rng.uniform(a, b);
    const auto cu = curve(u);
    const auto cv = curve(v);
    const double d = space.distance(cu, cv);
    const double expected = k * std::abs(u - v);
    worst.record(std::abs(d - expected), expected, [&] {
      return std::vector<Witness>{{"u", {u}}, {"v", {v}}, {"speed", {k}}, {"c(u)", space.coordinates(cu)},
                                  {"c(v)", space.coordinates(cv)}};
    });
  }
  return worst.finish();
}

/// Midpoint convexity of t -> d(gamma(t), eta(t)) for the segments
/// gamma = [x, y] and eta = [x2, y2] of the space's bicombing.
template <MetricModel S>
CheckReport check_busemann_convexity(const S& space, const typename S::point_type& x,
                                     const typename S::point_type& y, const typename S::point_type& x2,
                                     const typename S::point_type& y2, const CheckOptions& options = {}) {
  Rng rng(options.seed);
  detail::WorstCase worst("check_busemann_convexity", options);
  for (std::size_t k = 0; k < options.samples; ++k) {
    double a = rng.unit();
    double b = rng.unit();
    if (a > b) std::swap(a, b);
    const double m = 0.5 * (a + b);
    const double da = space.distance(space.geodesic(x, y, a), space.geodesic(x2, y2, a));
    const double db = space.distance(space.geodesic(x, y, b), space.geodesic(x2, y2, b));
    const double dm = space.distance(space.geodesic(x, y, m), space.geodesic(x2, y2, m));
    const double rhs = 0.5 * (da + db);
    worst.record(dm - rhs, rhs, [&] { return std::vector<Witness>{{"a", {a}}, {"b", {b}}}; });
  }
  return worst.finish();
}

/// The same inequality over freshly sampled segment pairs.
template <MetricModel S>
CheckReport check_busemann_convexity(const S& space, const CheckOptions& options = {}) {
  Rng rng(options.seed);
  detail::WorstCase worst("check_busemann_convexity", options);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const auto x = space.sample(rng);
    const auto y = space.sample(rng);
    const auto x2 = space.sample(rng);
    const auto y2 = space.sample(rng);
    double a = rng.unit();
    double b = rng.unit();
    if (a > b) std::swap(a, b);
    const double m = 0.5 * (a + b);
    const double da = space.distance(space.geodesic(x, y, a), space.geodesic(x2, y2, a));
    const double db = space.distance(space.geodesic(x, y, b), space.geodesic(x2, y2, b));
    const double dm = space.distance(space.geodesic(x, y, m), space.geodesic(x2, y2, m));
    const double rhs = 0.5 * (da + db);
    worst.record(dm - rhs, rhs, [&] {
      return std::vector<Witness>{{"x", space.coordinates(x)},   {"y", space.coordinates(y)},
                                  {"x'", space.coordinates(x2)}, {"y'", space.coordinates(y2)},
                                  {"a", {a}},                    {"b", {b}}};
    });
  }
  return worst.finish();
}

/// d(s(x,y,t), s(x',y',t)) <= (1-t) d(x,x') + t d(y,y').
template <MetricModel S, class Bicombing>
CheckReport check_conical(const S& space, const Bicombing& sigma, const CheckOptions& options = {}) {
  Rng rng(options.seed);
  detail::WorstCase worst("check_conical", options);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const auto x = space.sample(rng);
    const auto y = space.sample(rng);
    const auto x2 = space.sample(rng);
    const auto y2 = space.sample(rng);
    const double t = rng.unit();
    const double lhs = space.distance(sigma(x, y, t), sigma(x2, y2, t));
    const double rhs = (1.0 - t) * space.distance(x, x2) + t * space.distance(y, y2);
    worst.record(lhs - rhs, rhs, [&] {
      return std::vector<Witness>{{"x", space.coordinates(x)},   {"y", space.coordinates(y)},
                                  {"x'", space.coordinates(x2)}, {"y'", space.coordinates(y2)},
                                  {"t", {t}}};
    });
  }
  return worst.finish();
}

template <MetricModel S>
CheckReport check_conical(const S& space, const CheckOptions& options = {}) {
  return check_conical(space, [&space](const auto& p, const auto& q, double t) { return space.geodesic(p, q, t); },
                       options);
}

/// s(p, q, t) = s(x, y, (1-t) a + t b) for p = s(x, y, a), q = s(x, y, b).
template <MetricModel S, class Bicombing>
CheckReport check_consistent(const S& space, const Bicombing& sigma, const CheckOptions& options = {}) {
  Rng rng(options.seed);
  detail::WorstCase worst("check_consistent", options);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const auto x = space.sample(rng);
    const auto y = space.sample(rng);
    const double a = rng.unit();
    const double b = rng.unit();
    const double t = rng.unit();
    const auto p = sigma(x, y, a);
    const auto q = sigma(x, y, b);
    const double gap = space.distance(sigma(p, q, t), sigma(x, y, (1.0 - t) * a + t * b));
    worst.record(gap, space.distance(x, y), [&] {
      return std::vector<Witness>{{"x", space.coordinates(x)}, {"y", space.coordinates(y)},
                                  {"a", {a}},                  {"b", {b}},
                                  {"t", {t}}};
    });
  }
  return worst.finish();
}

template <MetricModel S>
CheckReport check_consistent(const S& space, const CheckOptions& options = {}) {
  return check_consistent(
      space, [&space](const auto& p, const auto& q, double t) { return space.geodesic(p, q, t); }, options);
}

/// Convexity, conical and consistency checks of the canonical bicombing.
template <MetricModel S>
CheckReport certify_busemann(const S& space, const CheckOptions& options = {}) {
  return combine_reports("certify_busemann", {check_busemann_convexity(space, options), check_conical(space, options),
                                              check_consistent(space, options)});
}

}  // namespace busekit
