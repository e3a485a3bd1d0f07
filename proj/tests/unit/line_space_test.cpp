#include <gtest/gtest.h>

#include <cmath>

#include "busekit/line_space.hpp"
#include "oracles.hpp"

using namespace busekit;

namespace {

const SpaceDescriptor kL4 = SpaceDescriptor::lp(2, 4.0);
const SpaceDescriptor kH2 = SpaceDescriptor::hyperbolic_plane();
const SpaceDescriptor kH2xR = SpaceDescriptor::product({SpaceDescriptor::hyperbolic_plane(), SpaceDescriptor::real_line()});

GeodesicLine vertical_l4(double x, double y = 0) { return make_line(kL4, Point{x, y}, std::vector<double>{0, 1}); }

GeodesicLine vertical_over(double re, double im, double s = 0) {
  return make_line(kH2xR, Point{re, im, s},
                   DirectionSpec::Weighted{{0, 1}, {std::vector<double>{}, std::vector<double>{1}}});
}

LineSpace l4_space() { return build_line_space(kL4, vertical_l4(0)); }
LineSpace product_space() { return build_line_space(kH2xR, vertical_over(0, 1)); }

double base_gap(const SpaceDescriptor& s, const LinePoint& a, const LinePoint& b) {
  return distance(s, a.base(), b.base());
}

}  // namespace

TEST(LineSpace, HyperbolicIsOnePoint) {
  const auto omega = make_line(kH2, Point{0, 1}, DirectionSpec::Endpoints{IdealPoint::finite(0), IdealPoint::infinity()});
  const LineSpace h = build_line_space(kH2, omega);
  EXPECT_TRUE(h.is_single_point());
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const LinePoint l = h.sample(rng);
    EXPECT_LT(h.distance(l, h.omega_point()), 1e-9);
  }
  EXPECT_TRUE(certify_linespace_busemann(h, {100, 1e-9, 1}).pass);
}

TEST(LineSpace, L4VerticalDistances) {
  const LineSpace h = l4_space();
  EXPECT_FALSE(h.is_single_point());
  const LinePoint a = h.line_at(Point{0, 3});
  const LinePoint b = h.line_at(Point{1, -7});
  EXPECT_NEAR(linespace_distance(h, a, b), 1.0, 1e-10);
  EXPECT_NEAR(linespace_distance(h, a, a), 0.0, 1e-12);
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const double c1 = rng.uniform(-10, 10), c2 = rng.uniform(-10, 10);
    EXPECT_NEAR(linespace_distance(h, h.line_at(Point{c1, 0}), h.line_at(Point{c2, 5})), std::abs(c1 - c2), 1e-9);
  }
}

TEST(LineSpace, L4BicombingMidpoint) {
  const LineSpace h = l4_space();
  const LinePoint a = h.line_at(Point{0, 0});
  const LinePoint b = h.line_at(Point{2, 0});
  const LinePoint m = linespace_bicombing(h, a, b, 0.5);
  EXPECT_NEAR(m.base()[0], 1.0, 1e-9);
  EXPECT_NEAR(m.base()[1], 0.0, 1e-9);
  EXPECT_EQ(linespace_bicombing(h, a, b, 0.0).base(), a.base());
  EXPECT_EQ(linespace_bicombing(h, a, b, 1.0).base(), b.base());
  EXPECT_THROW(linespace_bicombing(h, a, b, 1.5), Error);
}

TEST(LineSpace, ProductDistanceIsFactorDistance) {
  const LineSpace h = product_space();
  ASSERT_TRUE(h.factor_space().has_value());
  EXPECT_NEAR(linespace_distance(h, h.line_at(Point{0, 1, 0}), h.line_at(Point{0, 2, 5})), std::log(2.0), 1e-9);
  Rng rng(3);
  for (int k = 0; k < 300; ++k) {
    const LinePoint a = h.sample(rng);
    const LinePoint b = h.sample(rng);
    const Point za = h.to_factor(a), zb = h.to_factor(b);
    EXPECT_NEAR(linespace_distance(h, a, b), oracle::hyperbolic_distance({za[0], za[1]}, {zb[0], zb[1]}), 1e-6);
    EXPECT_LT(base_gap(kH2xR, h.from_factor(za), a), 1e-9);
  }
}

TEST(LineSpace, ProductBicombingMidpointIsFactorMidpoint) {
  const LineSpace h = product_space();
  const LinePoint m = linespace_bicombing(h, h.line_at(Point{0, 1, 0}), h.line_at(Point{0, 4, 0}), 0.5);
  const Point z = h.to_factor(m);
  EXPECT_NEAR(z[0], 0.0, 1e-8);
  EXPECT_NEAR(z[1], 2.0, 1e-8);
}

TEST(LineSpace, MetricAxioms) {
  for (const LineSpace& h : {l4_space(), product_space(), build_line_space(SpaceDescriptor::lp(3, 1.5), make_line(SpaceDescriptor::lp(3, 1.5), Point{0, 0, 0}, std::vector<double>{0, 0, 1}))}) {
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
      const LinePoint a = h.sample(rng), b = h.sample(rng), c = h.sample(rng);
      const double ab = h.distance(a, b), bc = h.distance(b, c), ac = h.distance(a, c);
      EXPECT_NEAR(ab, h.distance(b, a), 1e-8 * std::max(1.0, ab));
      EXPECT_LE(ac, ab + bc + 1e-8 * std::max(1.0, ac));
      EXPECT_LT(h.distance(a, a), 1e-9);
    }
  }
}

TEST(LineSpace, SigmaIgnoresRepresentativeShift) {
  const LineSpace h = product_space();
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const LinePoint a = h.sample(rng), b = h.sample(rng);
    const double shift = rng.uniform(-5, 5);
    const LinePoint a2{shift_line(a.line, shift)}, b2{shift_line(b.line, shift)};
    const double u = rng.unit();
    EXPECT_LT(base_gap(kH2xR, h.geodesic(a, b, u), h.geodesic(a2, b2, u)), 1e-8);
  }
}

TEST(LineSpace, SigmaIsALinearGeodesic) {
  for (const LineSpace& h : {l4_space(), product_space()}) {
    Rng rng(9);
    for (int k = 0; k < 10; ++k) {
      const LinePoint a = h.sample(rng), b = h.sample(rng);
      const double r = h.distance(a, b);
      const auto path = [&](double u) { return h.geodesic(a, b, u); };
      const auto rep = check_linear_geodesic(h, path, 0.0, 1.0, {100, 1e-8, 1});
      EXPECT_TRUE(rep.pass) << rep.worst_violation;
      EXPECT_NEAR(rep.witness[2].values[0], r, 1e-8 * std::max(1.0, r));
    }
  }
}

TEST(LineSpace, SigmaContainsPointBicombing) {
  const LineSpace h = l4_space();
  const LinePoint a = h.line_at(Point{0, 0});
  const LinePoint b = h.line_at(Point{2, 0});
  EXPECT_LT(check_sigma_in_Sigma(h, a, b, a.base(), b.base(), {200, 1e-9, 1}).worst_violation, 1e-12);
  Rng rng(11);
  for (const LineSpace& hs : {l4_space(), product_space()}) {
    for (int k = 0; k < 20; ++k) {
      const LinePoint l1 = hs.sample(rng), l2 = hs.sample(rng);
      const Point x1 = eval_line(l1.line, rng.uniform(-5, 5));
      const Point x2 = eval_line(l2.line, rng.uniform(-5, 5));
      EXPECT_TRUE(check_sigma_in_Sigma(hs, l1, l2, x1, x2, {50, 1e-8, 1}).pass);
    }
  }
}

TEST(LineSpace, CertifiedBusemann) {
  EXPECT_TRUE(certify_linespace_busemann(l4_space(), {500, 1e-8, 1}).pass);
  EXPECT_TRUE(certify_linespace_busemann(product_space(), {500, 1e-8, 1}).pass);
}

TEST(LineSpace, RejectsNonMembers) {
  const LineSpace h = l4_space();
  const LinePoint stranger{make_line(kL4, Point{0, 0}, std::vector<double>{1, 0})};
  EXPECT_FALSE(h.contains(stranger));
  EXPECT_THROW(linespace_distance(h, h.omega_point(), stranger), Error);
}
