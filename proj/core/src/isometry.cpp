#include "busekit/isometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "busekit/busemann.hpp"
#include "busekit/parallel.hpp"
#include "busekit/random.hpp"

namespace busekit {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kStructTol = 1e-12;

Eigen::MatrixXd matrix_of(const IsometrySpec::Affine& f) {
  Eigen::MatrixXd a(f.n, f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    for (std::size_t j = 0; j < f.n; ++j) a(i, j) = f.a[i * f.n + j];
  }
  return a;
}

Eigen::VectorXd vector_of(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::string format_point(std::span<const double> p) {
  std::ostringstream out;
  out.precision(10);
  out << "(";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p[i];
  out << ")";
  return out.str();
}

Point apply_raw(const SpaceDescriptor& space, const IsometrySpec& f, const Point& x) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto& af = f.affine_part();
      std::vector<double> y(af.n);
      for (std::size_t i = 0; i < af.n; ++i) {
        double s = af.b[i];
        for (std::size_t j = 0; j < af.n; ++j) s += af.a[i * af.n + j] * x[j];
        y[i] = s;
      }
      return Point(std::move(y));
    }
    case SpaceKind::hyperbolic:
      return from_complex(f.moebius_part().m.apply(as_complex(x)));
    case SpaceKind::product: {
      std::vector<Point> parts;
      const auto& pf = f.pair_part();
      for (std::size_t i = 0; i < pf.factors.size(); ++i) {
        parts.push_back(apply_raw(space.factors()[i], pf.factors[i], factor_point(space, x, i)));
      }
      return join_factors(space, parts);
    }
  }
  return x;
}

void check_kind(const SpaceDescriptor& space, const IsometrySpec& f) {
  switch (space.kind()) {
    case SpaceKind::lp:
      if (f.kind() != SpaceKind::lp || f.affine_part().n != space.arity()) {
        throw Error(Errc::dimension_mismatch, "lp-space isometries are affine maps of matching dimension");
      }
      return;
    case SpaceKind::hyperbolic:
      if (f.kind() != SpaceKind::hyperbolic) {
        throw Error(Errc::dimension_mismatch, "hyperbolic isometries are Moebius maps");
      }
      return;
    case SpaceKind::product:
      if (f.kind() != SpaceKind::product || f.pair_part().factors.size() != space.factors().size()) {
        throw Error(Errc::dimension_mismatch, "product isometries need one map per factor");
      }
      return;
  }
}

void check_lp_structure(const SpaceDescriptor& space, const IsometrySpec::Affine& f) {
  const std::size_t n = f.n;
  if (space.exponent() == 2.0) {
    const Eigen::MatrixXd a = matrix_of(f);
    const double err = (a.transpose() * a - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (err > 1e-9) throw Error(Errc::not_an_isometry, "linear part is not orthogonal");
    return;
  }
  std::vector<int> row_count(n, 0), col_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = std::abs(f.a[i * n + j]);
      if (v <= kStructTol) continue;
      if (std::abs(v - 1.0) > kStructTol) {
        throw Error(Errc::not_an_isometry, "linear part is not a signed permutation (required for p != 2)");
      }
      ++row_count[i];
      ++col_count[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (row_count[i] != 1 || col_count[i] != 1) {
      throw Error(Errc::not_an_isometry, "linear part is not a signed permutation (required for p != 2)");
    }
  }
}

MinimalDisplacement lp_minimal_displacement(const SpaceDescriptor& space, const IsometrySpec::Affine& f) {
  const std::size_t n = f.n;
  const double p = space.exponent();
  const Eigen::MatrixXd m = matrix_of(f) - Eigen::MatrixXd::Identity(n, n);
  const Eigen::VectorXd b = vector_of(f.b);
  // d_f(x) = ||(A - I) x + b||, so |f| = min ||e|| over e in b + range(A - I).
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  MinimalDisplacement out;
  if (p == 2.0) {
    // range(A - I) is the orthogonal complement of ker(A - I).
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-10);
    if (lu.dimensionOfKernel() > 0) {
      const Eigen::MatrixXd k = lu.kernel();
      const Eigen::HouseholderQR<Eigen::MatrixXd> qr(k);
      const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k.cols());
      e = q * (q.transpose() * b);
    }
    out.method = "orthogonal projection onto ker(A - I)";
  } else {
    // Cycles of the signed permutation: a cycle whose signs multiply to +1
    // fixes v (entries +-1) and the minimizer there is (<v, b> / k) v; other
    // cycles make A - I invertible and contribute nothing.
    std::vector<std::size_t> image(n);
    std::vector<double> sign(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(f.a[i * n + j]) > kStructTol) {
          image[j] = i;
          sign[j] = f.a[i * n + j] > 0.0 ? 1.0 : -1.0;
        }
      }
    }
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> cycle;
      std::vector<double> v;
      std::size_t j = start;
      double s = 1.0;
      while (!seen[j]) {
        seen[j] = true;
        cycle.push_back(j);
        v.push_back(s);
        s *= sign[j];
        j = image[j];
      }
      if (s < 0.0) continue;  // back at start with sign product -1
      double beta = 0.0;
      for (std::size_t k = 0; k < cycle.size(); ++k) beta += v[k] * b[cycle[k]];
      for (std::size_t k = 0; k < cycle.size(); ++k) e[cycle[k]] = beta / cycle.size() * v[k];
    }
    out.method = "signed-permutation cycles";
  }
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
  const Eigen::VectorXd x = cod.solve(e - b);
  out.value = detail::lp_norm(std::span<const double>(e.data(), n), p);
  out.argmin = Point(std::vector<double>(x.data(), x.data() + n));
  out.attainment = Attainment::attained;
  return out;
}

bool is_identity(const Moebius& m) {
  return std::abs(m.b) + std::abs(m.c) + std::abs(m.a - m.d) <= kStructTol && std::abs(std::abs(m.a) - 1.0) <= kStructTol;
}

struct FixedPoints {
  IdealPoint attracting;
  IdealPoint repelling;
  double multiplier;  // |lambda| > 1
};

FixedPoints hyperbolic_fixed_points(const Moebius& m) {
  const double tr = m.trace();
  const double root = std::sqrt((tr - 2.0) * (tr + 2.0));
  const double lambda = 0.5 * (tr + std::copysign(root, tr));
  const double mu = 1.0 / lambda;
  const auto eigvec = [&](double l) {
    const IdealPoint first{m.b, l - m.a};
    const IdealPoint second{l - m.d, m.c};
    return std::hypot(first.u, first.v) >= std::hypot(second.u, second.v) ? first : second;
  };
  return {eigvec(lambda), eigvec(mu), std::abs(lambda)};
}

GeodesicLine moebius_axis(const Moebius& m) {
  const FixedPoints fp = hyperbolic_fixed_points(m);
  double a = fp.attracting.u, c = fp.attracting.v, b = fp.repelling.u, d = fp.repelling.v;
  if (a * d - b * c < 0.0) {
    a = -a;
    c = -c;
  }
  return GeodesicLine(GeodesicLine::Hyperbolic{Moebius::normalized(a, b, c, d)});
}

MinimalDisplacement moebius_minimal_displacement(const Moebius& m) {
  MinimalDisplacement out;
  const double tr = std::abs(m.trace());
  out.method = "trace test";
  if (is_identity(m)) {
    out.value = 0.0;
    out.argmin = Point{0.0, 1.0};
    out.attainment = Attainment::attained;
  } else if (tr < 2.0 - kTraceTol) {
    const double im = std::sqrt((2.0 - tr) * (2.0 + tr)) / (2.0 * std::abs(m.c));
    out.value = 0.0;
    out.argmin = Point{(m.a - m.d) / (2.0 * m.c), im};
    out.attainment = Attainment::attained;
  } else if (tr <= 2.0 + kTraceTol) {
    out.value = 0.0;
    out.attainment = Attainment::not_attained;
  } else {
    out.value = 2.0 * std::acosh(tr / 2.0);
    out.argmin = eval_line(moebius_axis(m), 0.0);
    out.attainment = Attainment::attained;
  }
  return out;
}

int attainment_rank(Attainment a) {
  switch (a) {
    case Attainment::attained: return 0;
    case Attainment::not_attained: return 1;
    case Attainment::not_attained_within_budget: return 2;
    case Attainment::inconclusive: return 3;
  }
  return 3;
}

MinimalDisplacement minimal_raw(const SpaceDescriptor& space, const IsometrySpec& f) {
  switch (space.kind()) {
    case SpaceKind::lp:
      return lp_minimal_displacement(space, f.affine_part());
    case SpaceKind::hyperbolic:
      return moebius_minimal_displacement(f.moebius_part().m);
    case SpaceKind::product: {
      MinimalDisplacement out;
      out.attainment = Attainment::attained;
      out.method = "l2 rule over factors";
      double sum = 0.0;
      std::vector<Point> parts;
      const auto& pf = f.pair_part();
      for (std::size_t i = 0; i < pf.factors.size(); ++i) {
        const MinimalDisplacement m = minimal_raw(space.factors()[i], pf.factors[i]);
        sum += m.value * m.value;
        if (attainment_rank(m.attainment) > attainment_rank(out.attainment)) out.attainment = m.attainment;
        if (m.argmin) parts.push_back(*m.argmin);
      }
      out.value = std::sqrt(sum);
      if (out.attainment == Attainment::attained) out.argmin = join_factors(space, parts);
      return out;
    }
  }
  return {};
}

std::vector<double> to_chart(const SpaceDescriptor& space, const Point& x) {
  switch (space.kind()) {
    case SpaceKind::lp: return {x.coords().begin(), x.coords().end()};
    case SpaceKind::hyperbolic: return {x[0], std::log(x[1])};
    case SpaceKind::product: {
      std::vector<double> out;
      for (std::size_t i = 0; i < space.factors().size(); ++i) {
        const auto c = to_chart(space.factors()[i], factor_point(space, x, i));
        out.insert(out.end(), c.begin(), c.end());
      }
      return out;
    }
  }
  return {};
}

Point from_chart(const SpaceDescriptor& space, std::span<const double> c) {
  switch (space.kind()) {
    case SpaceKind::lp: return Point(std::vector<double>(c.begin(), c.end()));
    case SpaceKind::hyperbolic: return Point{c[0], std::exp(c[1])};
    case SpaceKind::product: {
      std::vector<Point> parts;
      for (std::size_t i = 0; i < space.factors().size(); ++i) {
        const auto& f = space.factors()[i];
        parts.push_back(from_chart(f, c.subspan(space.factor_offset(i), f.arity())));
      }
      return join_factors(space, parts);
    }
  }
  return {};
}

Point chart_origin(const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::lp: return Point(std::vector<double>(space.arity(), 0.0));
    case SpaceKind::hyperbolic: return Point{0.0, 1.0};
    case SpaceKind::product: {
      std::vector<Point> parts;
      for (const auto& f : space.factors()) parts.push_back(chart_origin(f));
      return join_factors(space, parts);
    }
  }
  return {};
}

}  // namespace

IsometrySpec IsometrySpec::affine(const std::vector<std::vector<double>>& a, std::vector<double> b) {
  const std::size_t n = b.size();
  if (n == 0 || a.size() != n) throw Error(Errc::dimension_mismatch, "affine map needs an n x n matrix and n-vector");
  Affine f;
  f.n = n;
  for (const auto& row : a) {
    if (row.size() != n) throw Error(Errc::dimension_mismatch, "affine map needs an n x n matrix and n-vector");
    f.a.insert(f.a.end(), row.begin(), row.end());
  }
  f.b = std::move(b);
  return IsometrySpec(std::move(f));
}

IsometrySpec IsometrySpec::moebius(double a, double b, double c, double d) {
  return IsometrySpec(Mobius{Moebius::normalized(a, b, c, d)});
}

IsometrySpec IsometrySpec::pair(std::vector<IsometrySpec> factors) {
  if (factors.empty()) throw Error(Errc::dimension_mismatch, "pair map needs at least one factor");
  return IsometrySpec(Pair{std::move(factors)});
}

IsometrySpec IsometrySpec::identity(const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      const std::size_t n = space.arity();
      std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i) a[i][i] = 1.0;
      return affine(a, std::vector<double>(n, 0.0));
    }
    case SpaceKind::hyperbolic:
      return moebius(1.0, 0.0, 0.0, 1.0);
    case SpaceKind::product: {
      std::vector<IsometrySpec> parts;
      for (const auto& f : space.factors()) parts.push_back(identity(f));
      return pair(std::move(parts));
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

SpaceKind IsometrySpec::kind() const noexcept {
  switch (rep_->index()) {
    case 0: return SpaceKind::lp;
    case 1: return SpaceKind::hyperbolic;
    default: return SpaceKind::product;
  }
}

const SpaceDescriptor& IsometrySpec::space() const {
  if (!space_) throw Error(Errc::unverified_isometry, "isometry has not been verified");
  return *space_;
}

IsometrySpec verify_isometry(const SpaceDescriptor& space, const IsometrySpec& f, VerifyOptions options) {
  check_kind(space, f);
  IsometrySpec out = f;
  if (space.kind() == SpaceKind::lp) check_lp_structure(space, f.affine_part());
  if (space.kind() == SpaceKind::product) {
    std::vector<IsometrySpec> parts;
    const auto& pf = f.pair_part();
    for (std::size_t i = 0; i < pf.factors.size(); ++i) {
      parts.push_back(verify_isometry(space.factors()[i], pf.factors[i], options));
    }
    out = IsometrySpec(IsometrySpec::Pair{std::move(parts)});
  }
  Rng rng(options.seed);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Point x = random_point(space, options.region_scale, rng);
    const Point y = random_point(space, options.region_scale, rng);
    const double d = detail::distance_unchecked(space, x.coords(), y.coords());
    const Point fx = apply_raw(space, out, x);
    const Point fy = apply_raw(space, out, y);
    if (!is_valid_point(space, fx) || !is_valid_point(space, fy)) {
      throw Error(Errc::not_an_isometry, "map leaves the space");
    }
    const double fd = detail::distance_unchecked(space, fx.coords(), fy.coords());
    if (!lengths_close(fd, d, options.tolerance)) {
      std::ostringstream msg;
      msg << "map changes distances: d(x,y) = " << d << ", d(fx,fy) = " << fd << " at x = " << format_point(x.coords())
          << ", y = " << format_point(y.coords());
      throw Error(Errc::not_an_isometry, msg.str());
    }
  }
  out.space_ = std::make_shared<const SpaceDescriptor>(space);
  return out;
}

Point apply_isometry(const IsometrySpec& f, const Point& x) {
  const SpaceDescriptor& space = f.space();
  validate_point(space, x);
  return apply_raw(space, f, x);
}

GeodesicLine map_line(const IsometrySpec& f, const GeodesicLine& line) {
  const SpaceDescriptor& space = f.space();
  validate_line(space, line);
  switch (space.kind()) {
    case SpaceKind::lp: {
      const auto& af = f.affine_part();
      const auto& l = line.lp();
      std::vector<double> base(af.n), dir(af.n);
      for (std::size_t i = 0; i < af.n; ++i) {
        double sb = af.b[i], sd = 0.0;
        for (std::size_t j = 0; j < af.n; ++j) {
          sb += af.a[i * af.n + j] * l.base[j];
          sd += af.a[i * af.n + j] * l.dir[j];
        }
        base[i] = sb;
        dir[i] = sd;
      }
      return GeodesicLine(GeodesicLine::Lp{std::move(base), std::move(dir)});
    }
    case SpaceKind::hyperbolic:
      return GeodesicLine(GeodesicLine::Hyperbolic{f.moebius_part().m * line.hyperbolic().frame});
    case SpaceKind::product: {
      std::vector<GeodesicLine::Track> tracks;
      const auto& pf = f.pair_part();
      const auto& pl = line.product();
      for (std::size_t i = 0; i < pf.factors.size(); ++i) {
        tracks.push_back({pl.tracks[i].weight, map_line(pf.factors[i], pl.tracks[i].line)});
      }
      return GeodesicLine(GeodesicLine::Product{std::move(tracks)});
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

double displacement(const IsometrySpec& f, const Point& x) {
  return distance(f.space(), x, apply_isometry(f, x));
}

const char* to_string(Attainment a) noexcept {
  switch (a) {
    case Attainment::attained: return "attained";
    case Attainment::not_attained: return "not_attained";
    case Attainment::not_attained_within_budget: return "not_attained_within_budget";
    case Attainment::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(IsometryKind k) noexcept {
  switch (k) {
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::hyperbolic: return "hyperbolic";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(Foliation f) noexcept {
  switch (f) {
    case Foliation::direct: return "direct";
    case Foliation::reversing: return "reversing";
    case Foliation::none: return "no";
  }
  return "no";
}

MinimalDisplacement minimal_displacement(const IsometrySpec& f) { return minimal_raw(f.space(), f); }

MinimalDisplacement minimal_displacement_search(const IsometrySpec& f, const SearchOptions& options) {
  const SpaceDescriptor& space = f.space();
  const auto objective = [&](const std::vector<double>& c) {
    const Point x = from_chart(space, c);
    return detail::distance_unchecked(space, x.coords(), apply_raw(space, f, x).coords());
  };
  const std::vector<double> center = to_chart(space, chart_origin(space));
  std::vector<double> best = center;
  double previous = objective(best);
  bool escaping = true;
  MinimalDisplacement out;
  out.method = "pattern search";
  for (int k = 0; k < options.max_scales; ++k) {
    const double r = options.initial_box * std::ldexp(1.0, k);
    std::vector<double> lo(center), hi(center);
    for (std::size_t i = 0; i < center.size(); ++i) {
      lo[i] -= r;
      hi[i] += r;
    }
    PatternOptions po = options.pattern;
    po.initial_step = options.pattern.initial_step * r;
    const PatternResult res = pattern_search(objective, best, lo, hi, po);
    best = res.x;
    bool interior = true;
    for (std::size_t i = 0; i < best.size(); ++i) {
      if (hi[i] - best[i] <= 1e-6 * r || best[i] - lo[i] <= 1e-6 * r) interior = false;
    }
    if (interior) {
      out.value = res.value;
      out.argmin = from_chart(space, best);
      out.attainment = Attainment::attained;
      return out;
    }
    if (k > 0 && !(res.value < previous)) escaping = false;
    previous = res.value;
  }
  out.value = previous;
  out.attainment = escaping ? Attainment::not_attained_within_budget : Attainment::inconclusive;
  return out;
}

IsometryClass classify_displacement(const MinimalDisplacement& m, double tol) {
  IsometryClass c;
  c.displacement = m.value;
  c.argmin = m.argmin;
  c.attainment = m.attainment;
  std::ostringstream w;
  w.precision(10);
  switch (m.attainment) {
    case Attainment::attained:
      if (m.value <= tol) {
        c.kind = IsometryKind::elliptic;
        w << "fixed point " << (m.argmin ? format_point(m.argmin->coords()) : "exists (" + m.method + ")");
      } else {
        c.kind = IsometryKind::hyperbolic;
        w << "minimizer " << (m.argmin ? format_point(m.argmin->coords()) : "exists (" + m.method + ")")
          << ", translation length " << m.value;
      }
      break;
    case Attainment::not_attained:
      c.kind = IsometryKind::parabolic;
      w << "no minimizer; infimum " << m.value << " (" << m.method << ")";
      break;
    case Attainment::not_attained_within_budget:
    case Attainment::inconclusive:
      c.kind = IsometryKind::unknown;
      w << to_string(m.attainment) << "; best value " << m.value;
      break;
  }
  c.witness = w.str();
  c.semi_simple = c.kind == IsometryKind::elliptic || c.kind == IsometryKind::hyperbolic;
  return c;
}

IsometryClass classify(const IsometrySpec& f) {
  return classify_displacement(minimal_displacement(f), f.space().tolerances().distance);
}

namespace {

Axis axis_raw(const SpaceDescriptor& space, const IsometrySpec& f, const MinimalDisplacement& m) {
  switch (space.kind()) {
    case SpaceKind::lp: {
      const Point x = *m.argmin;
      const Point fx = apply_raw(space, f, x);
      std::vector<double> dir(x.size());
      for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = fx[i] - x[i];
      const double n = detail::lp_norm(dir, space.exponent());
      for (double& c : dir) c /= n;
      return {GeodesicLine(GeodesicLine::Lp{{x.coords().begin(), x.coords().end()}, std::move(dir)}), m.value, 0.0};
    }
    case SpaceKind::hyperbolic:
      return {moebius_axis(f.moebius_part().m), m.value, 0.0};
    case SpaceKind::product: {
      std::vector<GeodesicLine::Track> tracks;
      const auto& pf = f.pair_part();
      for (std::size_t i = 0; i < pf.factors.size(); ++i) {
        const auto& fs = space.factors()[i];
        const MinimalDisplacement mi = minimal_raw(fs, pf.factors[i]);
        if (mi.value > fs.tolerances().distance) {
          tracks.push_back({mi.value / m.value, axis_raw(fs, pf.factors[i], mi).line});
        } else {
          tracks.push_back({0.0, default_line(fs, *mi.argmin)});
        }
      }
      return {make_product_line(space, std::move(tracks)), m.value, 0.0};
    }
  }
  throw Error(Errc::invalid_space, "unknown space kind");
}

}  // namespace

Axis find_axis(const IsometrySpec& f) {
  const SpaceDescriptor& space = f.space();
  const MinimalDisplacement m = minimal_displacement(f);
  const IsometryClass c = classify_displacement(m, space.tolerances().distance);
  if (c.kind != IsometryKind::hyperbolic) {
    throw Error(Errc::not_hyperbolic, std::string("isometry is ") + to_string(c.kind) + ", not hyperbolic");
  }
  Axis axis = axis_raw(space, f, m);
  // f(gamma(t)) = gamma(t + l) with l = -b_gamma(f(gamma(0))).
  axis.translation = -detail::busemann_closed_form(space, axis.line, apply_raw(space, f, eval_line(axis.line, 0.0)));
  double worst = std::abs(std::abs(axis.translation) - m.value);
  for (int k = 0; k < 64; ++k) {
    const double t = -10.0 + 20.0 * k / 63.0;
    const Point image = apply_raw(space, f, eval_line(axis.line, t));
    const Point target = eval_line(axis.line, t + axis.translation);
    worst = std::max(worst, detail::distance_unchecked(space, image.coords(), target.coords()));
  }
  axis.residual = worst;
  if (!(worst <= 1e-8 * std::max(1.0, m.value))) {
    std::ostringstream msg;
    msg << "axis fails the translation law (residual " << worst << ")";
    throw Error(Errc::axis_check_failed, msg.str());
  }
  return axis;
}

Foliation preserves_foliation(const IsometrySpec& g, const GeodesicLine& omega) {
  const SpaceDescriptor& space = g.space();
  const GeodesicLine image = map_line(g, omega);
  if (is_parallel(space, image, omega)) return Foliation::direct;
  if (is_parallel(space, reversed_line(image), omega)) return Foliation::reversing;
  return Foliation::none;
}

}  // namespace busekit
