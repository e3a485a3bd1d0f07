#include <gtest/gtest.h>

#include <cmath>

#include "busekit/parallel.hpp"
#include "oracles.hpp"

using namespace busekit;

namespace {

const SpaceDescriptor kL4 = SpaceDescriptor::lp(2, 4.0);
const SpaceDescriptor kH2 = SpaceDescriptor::hyperbolic_plane();
const SpaceDescriptor kH2xR = SpaceDescriptor::product({SpaceDescriptor::hyperbolic_plane(), SpaceDescriptor::real_line()});

GeodesicLine vertical_l4(double x) { return make_line(kL4, Point{x, 0}, std::vector<double>{0, 1}); }

GeodesicLine vertical_h2(double re) {
  return make_line(kH2, Point{re, 1}, DirectionSpec::Endpoints{IdealPoint::finite(re), IdealPoint::infinity()});
}

GeodesicLine vertical_over(const Point& z) {
  return make_line(kH2xR, Point{z[0], z[1], 0},
                   DirectionSpec::Weighted{{0, 1}, {std::vector<double>{}, std::vector<double>{1}}});
}

std::vector<SpaceDescriptor> models() {
  return {SpaceDescriptor::lp(2, 1.5), kL4, SpaceDescriptor::lp(3, 2.0), kH2, kH2xR};
}

}  // namespace

TEST(Projection, L4OntoAxis) {
  const auto axis = make_line(kL4, Point{0, 0}, std::vector<double>{1, 0});
  const auto p = project_to_line(kL4, Point{1, 2}, axis);
  EXPECT_NEAR(p.parameter, 1.0, 1e-10);
  EXPECT_NEAR(p.distance, 2.0, 1e-12);
}

TEST(Projection, L4UnitDiagonal) {
  const double c = std::pow(2.0, -0.25);  // (c, c) has unit l4 norm
  const auto diag = make_line(kL4, Point{0, 0}, std::vector<double>{c, c});
  const auto p = project_to_line(kL4, Point{2, 1}, diag);
  const double scan = oracle::argmin_scan(
      [&](double s) { return oracle::lp_distance({2, 1}, {s * c, s * c}, 4.0); }, -5, 5);
  EXPECT_NEAR(p.parameter, scan, 1e-8);
  EXPECT_NEAR(p.parameter, 1.5 * std::pow(2.0, 0.25), 1e-10);
  EXPECT_NEAR(p.distance, std::pow(0.125, 0.25), 1e-12);
}

TEST(Projection, HyperbolicOntoVertical) {
  const auto p = project_to_line(kH2, Point{1, 1}, vertical_h2(0));
  EXPECT_NEAR(p.parameter, oracle::vertical_projection_parameter({1, 1}), 1e-10);
  EXPECT_NEAR(p.point[0], 0.0, 1e-12);
  EXPECT_NEAR(p.point[1], std::sqrt(2.0), 1e-10);
}

TEST(Projection, MatchesScanOracleInEveryModel) {
  for (const auto& s : models()) {
    Rng rng(21);
    for (int k = 0; k < 40; ++k) {
      const auto line = random_line(s, 5.0, rng);
      const Point x = random_point(s, 5.0, rng);
      const auto p = project_to_line(s, x, line);
      const auto f = [&](double t) { return distance(s, x, eval_line(line, t)); };
      const double scan = oracle::argmin_scan(f, p.parameter - 40, p.parameter + 40, 4001);
      EXPECT_NEAR(f(p.parameter), f(scan), 1e-10) << s.describe();
      EXPECT_LE(p.distance, f(scan) + 1e-10);
    }
  }
}

TEST(Projection, DifferentBracketsAgree) {
  for (const auto& s : models()) {
    Rng rng(23);
    for (int k = 0; k < 100; ++k) {
      const auto line = random_line(s, 5.0, rng);
      const Point x = random_point(s, 5.0, rng);
      const auto a = project_to_line(s, x, line, {-20.0, 1.0});
      const auto b = project_to_line(s, x, line, {35.0, 4.0});
      EXPECT_NEAR(a.distance, b.distance, 1e-12 * std::max(1.0, a.distance)) << s.describe();
      EXPECT_NEAR(a.parameter, b.parameter, 1e-8) << s.describe();
    }
  }
}

TEST(Parallel, L4Examples) {
  EXPECT_TRUE(is_parallel(kL4, vertical_l4(0), vertical_l4(1)));
  const auto down = make_line(kL4, Point{1, 0}, std::vector<double>{0, -1});
  EXPECT_FALSE(is_parallel(kL4, vertical_l4(0), down));
  EXPECT_TRUE(is_parallel(kL4, vertical_l4(0), reversed_line(down)));
}

TEST(Parallel, HyperbolicDistinctVerticalsDiverge) {
  const auto g = vertical_h2(0);
  const auto e = vertical_h2(1);
  EXPECT_FALSE(is_parallel(kH2, g, e));
  EXPECT_GT(sampled_slope(kH2, g, e, -256.0), 1.0);
  EXPECT_TRUE(is_parallel(kH2, g, shift_line(g, 2.5)));
  EXPECT_FALSE(is_parallel(kH2, g, reversed_line(g)));
}

TEST(Parallel, HyperbolicSamplingHorizonIsConditioned) {
  const auto g = vertical_h2(0);
  const double Tv = sample_horizon(kH2, g, shift_line(g, 1.0));
  EXPECT_GE(Tv, 8.0);
  EXPECT_LT(std::abs(sampled_slope(kH2, g, shift_line(g, 1.0), Tv)), 1e-6);
  Rng rng(3);
  const auto tilted = random_line(kH2, 5.0, rng);
  const double T = sample_horizon(kH2, tilted, shift_line(tilted, 0.5));
  EXPECT_GE(T, 2.0);
  EXPECT_LT(std::abs(sampled_slope(kH2, tilted, shift_line(tilted, 0.5), T)), 1e-6);
}

TEST(Parallel, RandomParallelsAreParallel) {
  for (const auto& s : models()) {
    Rng rng(29);
    for (int k = 0; k < 100; ++k) {
      const auto g = random_line(s, 5.0, rng);
      const auto e = random_parallel(s, g, 5.0, rng);
      EXPECT_TRUE(is_parallel(s, g, e)) << s.describe();
      EXPECT_TRUE(is_parallel_sampled(s, g, e)) << s.describe();
    }
  }
}

TEST(Parallel, DistanceIsConstantAlongShiftedParallels) {
  for (const auto& s : models()) {
    Rng rng(31);
    for (int k = 0; k < 30; ++k) {
      const auto g = random_line(s, 5.0, rng);
      const auto e = random_parallel(s, g, 5.0, rng);
      const double c = rng.uniform(-5, 5);
      double lo = INFINITY, hi = -INFINITY;
      for (int i = 0; i <= 200; ++i) {
        const double t = -1000.0 + 10.0 * i;
        if (s.kind() != SpaceKind::lp && std::abs(t) > 10.0) continue;  // far points lose relative precision near the ideal boundary
        const double d = distance(s, eval_line(g, t), eval_line(e, t + c));
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      EXPECT_LE(hi - lo, 1e-8 * std::max(1.0, hi)) << s.describe();
    }
  }
}

TEST(Hausdorff, Examples) {
  EXPECT_NEAR(line_hausdorff(kL4, vertical_l4(0), vertical_l4(1)), 1.0, 1e-10);
  const auto g = vertical_l4(0);
  EXPECT_NEAR(line_hausdorff(kL4, g, g), 0.0, 1e-12);
  const Point P{0, 1}, Q{2, 3};
  EXPECT_NEAR(line_hausdorff(kH2xR, vertical_over(P), vertical_over(Q)),
              oracle::hyperbolic_distance({0, 1}, {2, 3}), 1e-9);
  EXPECT_THROW(line_hausdorff(kH2, vertical_h2(0), vertical_h2(1)), Error);
}

TEST(Hausdorff, IndependentOfEvaluationParameter) {
  for (const auto& s : models()) {
    Rng rng(37);
    for (int k = 0; k < 30; ++k) {
      const auto g = random_line(s, 5.0, rng);
      const auto e = random_parallel(s, g, 5.0, rng);
      const double h = line_hausdorff(s, g, e);
      for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(line_hausdorff(s, shift_line(g, rng.uniform(-10, 10)), e), h, 1e-9 * std::max(1.0, h));
      }
    }
  }
}

TEST(Align, UndoesShift) {
  const auto g = vertical_l4(0);
  EXPECT_NEAR(align(kL4, g, vertical_l4(1)).shift, 0.0, 1e-10);
  EXPECT_NEAR(align(kL4, g, shift_line(vertical_l4(1), 3.0)).shift, -3.0, 1e-8);
  const auto a = align(kH2xR, vertical_over(Point{0, 1}), shift_line(vertical_over(Point{1, 2}), -4.0));
  EXPECT_NEAR(a.shift, 4.0, 1e-8);
}

TEST(Strip, L4AffineStrip) {
  const auto strip = build_strip(kL4, vertical_l4(0), shift_line(vertical_l4(1), 2.0));
  EXPECT_NEAR(strip.width(), 1.0, 1e-10);
  for (double t : {-3.0, 0.0, 5.0}) {
    for (double u : {0.0, 0.25, 1.0}) {
      const Point b = strip(t, u);
      EXPECT_NEAR(b[0], u, 1e-9);
      EXPECT_NEAR(b[1], t, 1e-9);
    }
  }
  EXPECT_EQ(strip(5.0, 0.0), eval_line(vertical_l4(0), 5.0));
  const Point q = eval_line(strip_line(strip, 0.25), 0.0);
  EXPECT_NEAR(q[0], 0.25, 1e-9);
  EXPECT_NEAR(q[1], 0.0, 1e-9);
  EXPECT_THROW(strip_line(strip, 1.5), Error);
  EXPECT_THROW(strip(0.0, -0.1), Error);
}

TEST(Strip, ProductStripFollowsFactorGeodesic) {
  const Point P{0, 1}, Q{2, 3};
  const auto strip = build_strip(kH2xR, vertical_over(P), vertical_over(Q));
  const double r = strip.width();
  EXPECT_NEAR(r, oracle::hyperbolic_distance({0, 1}, {2, 3}), 1e-9);
  for (double u : {0.1 * r, 0.5 * r, 0.9 * r}) {
    const Point b = strip(4.0, u);
    EXPECT_NEAR(b[2], 4.0, 1e-9);
    EXPECT_NEAR(oracle::hyperbolic_distance({0, 1}, {b[0], b[1]}), u, 1e-9);
    EXPECT_NEAR(oracle::hyperbolic_distance({b[0], b[1]}, {2, 3}), r - u, 1e-9);
  }
}

TEST(Strip, LinesAreParallelGeodesicsAtDistanceOffset) {
  for (const auto& s : {SpaceDescriptor::lp(2, 1.5), kL4, kH2xR, SpaceDescriptor::product({kL4, kH2})}) {
    Rng rng(41);
    const ModelSpace m(s);
    for (int k = 0; k < 20; ++k) {
      const auto g = random_line(s, 5.0, rng);
      const auto strip = build_strip(s, g, random_parallel(s, g, 5.0, rng));
      const double r = strip.width();
      const double u = rng.uniform(0, r);
      const double v = rng.uniform(0, r);
      const auto gu = strip_line(strip, u);
      const auto gv = strip_line(strip, v);
      EXPECT_TRUE(check_geodesic(m, [&](double t) { return eval_line(gu, t); }, -10, 10, {200, 1e-9, 1}).pass);
      EXPECT_TRUE(is_parallel(s, gu, strip.gamma()));
      EXPECT_TRUE(is_parallel(s, gu, strip.eta()));
      EXPECT_NEAR(line_hausdorff(s, gu, gv), std::abs(u - v), 1e-8);
    }
  }
}

TEST(StripDiagonal, Examples) {
  const auto strip = build_strip(kL4, vertical_l4(0), vertical_l4(1));
  EXPECT_TRUE(check_strip_diagonal(strip, 0.0, 0.0, {500, 1e-9, 1}).pass);
  EXPECT_TRUE(check_strip_diagonal(strip, 0.0, 1.0, {500, 1e-9, 1}).pass);
  const auto degenerate = build_strip(kL4, vertical_l4(0), vertical_l4(0));
  EXPECT_EQ(degenerate.width(), 0.0);
  EXPECT_TRUE(check_strip_diagonal(degenerate, 1.0, 2.0).pass);
}

TEST(StripDiagonal, RandomDiagonalsPass) {
  Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    const auto g = random_line(kH2xR, 5.0, rng);
    const auto strip = build_strip(kH2xR, g, random_parallel(kH2xR, g, 5.0, rng));
    EXPECT_TRUE(check_strip_diagonal(strip, rng.uniform(-5, 5), rng.uniform(-3, 3), {200, 1e-8, 1}).pass);
  }
}

TEST(CollinearTransfer, StripTriples) {
  const auto strip = build_strip(kL4, vertical_l4(0), shift_line(vertical_l4(3), 1.0));
  const auto g1 = strip_line(strip, 0.0);
  const auto g2 = strip_line(strip, 1.0);
  const auto g3 = strip_line(strip, 2.5);
  const Point x = eval_line(g1, 0.7);
  EXPECT_TRUE(collinear_transfer(kL4, g1, g2, g3, x).pass);

  const auto same = collinear_transfer(kL4, g1, g1, g3, x);
  EXPECT_TRUE(same.pass);
  EXPECT_LT(distance(kL4, same.y, x), 1e-9);
  const auto tail = collinear_transfer(kL4, g1, g2, g2, x);
  EXPECT_TRUE(tail.pass);
  EXPECT_LT(distance(kL4, tail.y, tail.z), 1e-9);

  EXPECT_THROW(collinear_transfer(kL4, g2, g1, g3, eval_line(g2, 0.0)), Error);
}

TEST(LineThrough, MembershipOfXOmega) {
  EXPECT_TRUE(try_line_through(kL4, vertical_l4(0), Point{3, 4}).has_value());
  EXPECT_TRUE(try_line_through(kH2, vertical_h2(0), Point{0, 5}).has_value());
  EXPECT_FALSE(try_line_through(kH2, vertical_h2(0), Point{1, 2}).has_value());
  EXPECT_THROW(line_through(kH2, vertical_h2(0), Point{1, 2}), Error);
}
