#include "busekit/busemann.hpp"

#include <cmath>

namespace busekit {

namespace detail {

namespace {

double lp_mass(const std::vector<double>& dir, double p) {
  double n = 0.0;
  for (double c : dir) n += std::pow(std::abs(c), p);
  return n;
}

}  // namespace

double busemann_closed_form(const SpaceDescriptor& space, const GeodesicLine& eta, const Point& x) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto& l = eta.lp();
      const double p = space.exponent();
      double pairing = 0.0;
      for (std::size_t i = 0; i < l.dir.size(); ++i) {
        pairing += std::copysign(std::pow(std::abs(l.dir[i]), p - 1.0), l.dir[i]) * (x[i] - l.base[i]);
      }
      // Stored directions are unit only up to rounding.
      return -pairing / std::pow(lp_mass(l.dir, p), (p - 1.0) / p);
    }
    case SpaceKind::hyperbolic:
      return -std::log(eta.hyperbolic().frame.inverse().apply(as_complex(x)).imag());
    case SpaceKind::product: {
      const auto& pr = eta.product();
      double w2 = 0.0;
      for (const auto& t : pr.tracks) w2 += t.weight * t.weight;
      double sum = 0.0;
      for (std::size_t i = 0; i < pr.tracks.size(); ++i) {
        if (pr.tracks[i].weight <= 0.0) continue;
        sum += pr.tracks[i].weight *
               busemann_closed_form(space.factors()[i], pr.tracks[i].line, factor_point(space, x, i));
      }
      return sum / std::sqrt(w2);
    }
  }
  return 0.0;
}

double busemann_excess(const SpaceDescriptor& space, const GeodesicLine& eta, const Point& x, double t) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      // d(x, eta(t)) = t ||dir - v/t||; expand each |dir_i - v_i/t|^p around
      // |dir_i|^p so the subtraction of t happens before rounding.
      const auto& l = eta.lp();
      const double p = space.exponent();
      double s = 0.0;
      for (std::size_t i = 0; i < l.dir.size(); ++i) {
        const double v = x[i] - l.base[i];
        const double d = l.dir[i];
        if (d == 0.0) {
          s += std::pow(std::abs(v) / t, p);
          continue;
        }
        const double r = -v / (t * d);
        const double m = std::pow(std::abs(d), p);
        if (r > -1.0) {
          s += m * std::expm1(p * std::log1p(r));
        } else {
          s += m * (std::pow(std::abs(1.0 + r), p) - 1.0);
        }
      }
      s /= lp_mass(l.dir, p);  // relative to a unit direction
      return t * std::expm1(std::log1p(s) / p);
    }
    case SpaceKind::hyperbolic: {
      const std::complex<double> w = eta.hyperbolic().frame.inverse().apply(as_complex(x));
      if (t < 30.0) return hyperbolic_distance(w, {0.0, std::exp(t)}) - t;
      // cosh d = (|w|^2 q + 1/q) / (2 Im w) with q = e^{-t}; d - t = ln(q cosh d + q sinh d).
      const double q = std::exp(-t);
      const double qc = (std::norm(w) * q * q + 1.0) / (2.0 * w.imag());
      return std::log(qc + std::sqrt((qc - q) * (qc + q)));
    }
    case SpaceKind::product: {
      const auto& pr = eta.product();
      double w2 = 0.0;
      for (const auto& tr : pr.tracks) w2 += tr.weight * tr.weight;
      const double norm = std::sqrt(w2);
      double numer = 0.0;
      double d2 = 0.0;
      for (std::size_t i = 0; i < pr.tracks.size(); ++i) {
        const auto& f = space.factors()[i];
        const Point xi = factor_point(space, x, i);
        const double w = pr.tracks[i].weight;
        if (w > 0.0) {
          const double e = busemann_excess(f, pr.tracks[i].line, xi, w * t);
          const double wn = w / norm;
          numer += 2.0 * wn * t * e + e * e;
          d2 += (wn * t + e) * (wn * t + e);
        } else {
          const double c = distance_unchecked(f, xi.coords(), eval_line(pr.tracks[i].line, 0.0).coords());
          numer += c * c;
          d2 += c * c;
        }
      }
      // d - t = (d^2 - t^2) / (d + t)
      return numer / (std::sqrt(d2) + t);
    }
  }
  return 0.0;
}

}  // namespace detail

BusemannEvaluator::BusemannEvaluator(SpaceDescriptor space, GeodesicLine eta, LimitOptions options)
    : space_(std::move(space)), eta_(std::move(eta)), options_(options) {
  validate_line(space_, eta_);
  if (!(options_.initial_t > 0.0) || options_.max_doublings < 1 || !(options_.tolerance > 0.0)) {
    throw Error(Errc::invalid_parameter, "limit options need t0 > 0, at least one doubling and a positive tolerance");
  }
}

double BusemannEvaluator::value(const Point& x) const {
  validate_point(space_, x);
  return detail::busemann_closed_form(space_, eta_, x);
}

double BusemannEvaluator::excess(const Point& x, double t) const {
  validate_point(space_, x);
  return detail::busemann_excess(space_, eta_, x, t);
}

LimitDiagnostics BusemannEvaluator::limit(const Point& x) const {
  validate_point(space_, x);
  LimitDiagnostics out;
  double t = options_.initial_t;
  double prev = detail::busemann_excess(space_, eta_, x, t);
  out.value = prev;
  out.gap = std::abs(prev);
  for (int k = 1; k <= options_.max_doublings; ++k) {
    t *= 2.0;
    const double cur = detail::busemann_excess(space_, eta_, x, t);
    if (cur > prev + 1e-12 * std::max(1.0, std::abs(prev))) out.monotone = false;
    out.value = cur;
    out.gap = std::abs(cur - prev);
    out.doublings = k;
    out.last_t = t;
    if (out.gap < options_.tolerance) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  last_ = out;
  return out;
}

double busemann_value(const BusemannEvaluator& b, const Point& x) { return b.value(x); }

}  // namespace busekit
