#pragma once

#include <functional>
#include <vector>

namespace busekit {

struct MinimizeOptions {
  double center = 0.0;
  double half_width = 1.0;   // initial bracket [center - w, center + w]
  int max_expansions = 64;   // bracket doublings before giving up
  int max_iterations = 200;  // golden-section steps
  double tolerance = 1e-10;  // on the argument, relative to max(1, |x|)
};

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int expansions = 0;
  int iterations = 0;
  bool polished = false;
};

/// Minimizes a convex function of one variable.
///
/// The bracket is doubled until f rises (weakly) at both ends, then narrowed
/// by golden section. Golden section alone stalls near sqrt(eps) because the
/// objective is flat at the minimum; when `slope` is given the result is
/// finished by bisection on its sign. Throws bracket_failure when the bracket
/// never closes, which for a convex objective means it has no minimizer.
ScalarMinimum minimize_convex(const std::function<double(double)>& f, const MinimizeOptions& options = {},
                              const std::function<double(double)>& slope = {});

struct PatternOptions {
  double initial_step = 1.0;
  double min_step = 1e-10;
  int max_evaluations = 200000;
};

struct PatternResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

/// Compass search over the box [lower, upper]; derivative free.
PatternResult pattern_search(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const std::vector<double>& lower,
                             const std::vector<double>& upper, const PatternOptions& options = {});

}  // namespace busekit
