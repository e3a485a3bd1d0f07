#include "busekit/minimize.hpp"

#include <algorithm>
#include <cmath>

#include "busekit/error.hpp"

namespace busekit {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt 5 - 1) / 2

}  // namespace

ScalarMinimum minimize_convex(const std::function<double(double)>& f, const MinimizeOptions& options,
                              const std::function<double(double)>& slope) {
  ScalarMinimum out;
  const double c = options.center;
  const double fc = f(c);
  double r = options.half_width;
  for (;;) {
    if (f(c - r) >= fc && f(c + r) >= fc) break;
    if (++out.expansions > options.max_expansions) {
      throw Error(Errc::bracket_failure, "bracket expansion exceeded its cap; objective has no minimizer");
    }
    r *= 2.0;
  }
  const double lo0 = c - r;
  const double hi0 = c + r;

  double a = lo0, b = hi0;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (out.iterations < options.max_iterations) {
    const double mid = 0.5 * (a + b);
    if (b - a <= options.tolerance * std::max(1.0, std::abs(mid))) break;
    ++out.iterations;
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  out.x = f1 <= f2 ? x1 : x2;

  if (slope) {
    // Grow a sign-change bracket around the golden estimate inside the
    // original bracket, then bisect.
    double width = std::max(b - a, 1e-8 * std::max(1.0, std::abs(out.x)));
    double lo = std::max(lo0, out.x - width);
    double hi = std::min(hi0, out.x + width);
    while (slope(lo) > 0.0 && lo > lo0) {
      width *= 4.0;
      lo = std::max(lo0, out.x - width);
    }
    while (slope(hi) < 0.0 && hi < hi0) {
      width *= 4.0;
      hi = std::min(hi0, out.x + width);
    }
    if (slope(lo) <= 0.0 && slope(hi) >= 0.0) {
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-13 * std::max(1.0, std::abs(mid))) break;
        const double g = slope(mid);
        if (g == 0.0) {
          lo = hi = mid;
          break;
        }
        (g < 0.0 ? lo : hi) = mid;
      }
      // f is flat here, so comparing values would only compare rounding
      out.x = 0.5 * (lo + hi);
      out.polished = true;
    }
  }
  out.value = f(out.x);
  return out;
}

PatternResult pattern_search(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const std::vector<double>& lower,
                             const std::vector<double>& upper, const PatternOptions& options) {
  PatternResult out;
  const std::size_t n = x0.size();
  for (std::size_t i = 0; i < n; ++i) x0[i] = std::clamp(x0[i], lower[i], upper[i]);
  out.x = std::move(x0);
  out.value = f(out.x);
  out.evaluations = 1;
  double step = options.initial_step;
  while (step >= options.min_step && out.evaluations < options.max_evaluations) {
    bool improved = false;
    for (std::size_t i = 0; i < n && out.evaluations < options.max_evaluations; ++i) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> y = out.x;
        y[i] = std::clamp(y[i] + sign * step, lower[i], upper[i]);
        if (y[i] == out.x[i]) continue;
        const double v = f(y);
        ++out.evaluations;
        if (v < out.value) {
          out.x = std::move(y);
          out.value = v;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return out;
}

}  // namespace busekit
