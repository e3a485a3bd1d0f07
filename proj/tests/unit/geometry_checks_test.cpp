#include <gtest/gtest.h>

#include <cmath>

#include "busekit/checks.hpp"
#include "busekit/geodesic.hpp"

using namespace busekit;

namespace {

std::vector<SpaceDescriptor> models() {
  return {SpaceDescriptor::lp(2, 1.5), SpaceDescriptor::lp(2, 4.0), SpaceDescriptor::hyperbolic_plane(),
          SpaceDescriptor::product({SpaceDescriptor::hyperbolic_plane(), SpaceDescriptor::real_line()})};
}

}  // namespace

TEST(CheckGeodesic, PassesOnLines) {
  const ModelSpace m(SpaceDescriptor::lp(2, 4.0));
  const auto line = make_line(m.descriptor(), Point{1, 2}, std::vector<double>{0, 1});
  const auto r = check_geodesic(m, [&](double t) { return eval_line(line, t); }, -10, 10, {1000, 1e-9, 1});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.samples, 1000u);
}

TEST(CheckGeodesic, FailsOnParabola) {
  const ModelSpace m(SpaceDescriptor::lp(2, 4.0));
  const auto r = check_geodesic(m, [](double t) { return Point{t, t * t}; }, 0, 1, {1000, 1e-9, 1});
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.worst_violation, 0.0);
  EXPECT_EQ(r.property, "check_geodesic");
  EXPECT_FALSE(r.witness.empty());
}

TEST(CheckGeodesic, FailsOnNonUnitSpeedLine) {
  const ModelSpace m(SpaceDescriptor::lp(2, 2.0));
  const auto line = make_unchecked_lp_line({0, 0}, {2, 0});
  EXPECT_FALSE(check_geodesic(m, [&](double t) { return eval_line(line, t); }, 0, 1, {100, 1e-9, 1}).pass);
}

TEST(CheckGeodesic, NeedsTwoSamples) {
  const ModelSpace m(SpaceDescriptor::lp(2, 2.0));
  EXPECT_THROW(check_geodesic(m, [](double t) { return Point{t, 0}; }, 0, 1, {1, 1e-9, 1}), Error);
}

TEST(BusemannConvexity, IdenticalSegmentsHaveZeroViolation) {
  const ModelSpace m(SpaceDescriptor::hyperbolic_plane());
  const Point x{0, 1}, y{3, 2};
  const auto r = check_busemann_convexity(m, x, y, x, y, {500, 1e-12, 1});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.worst_violation, 0.0);
}

TEST(BusemannConvexity, PassesInEveryModel) {
  for (const auto& s : models()) {
    const ModelSpace m(s);
    EXPECT_TRUE(check_busemann_convexity(m, {3000, 1e-9, 4}).pass) << s.describe();
  }
}

TEST(Conical, PassesInEveryModel) {
  for (const auto& s : models()) {
    const ModelSpace m(s);
    EXPECT_TRUE(check_conical(m, {3000, 1e-9, 4}).pass) << s.describe();
  }
}

TEST(Consistent, PassesInEveryModel) {
  for (const auto& s : models()) {
    const ModelSpace m(s);
    EXPECT_TRUE(check_consistent(m, {3000, 1e-9, 4}).pass) << s.describe();
  }
}

TEST(Conical, DetectsABadBicombing) {
  // Reparametrising segments by t^2 breaks the conical inequality.
  const ModelSpace m(SpaceDescriptor::lp(2, 2.0));
  const auto bent = [&](const Point& x, const Point& y, double t) { return m.geodesic(x, y, t * t); };
  EXPECT_FALSE(check_conical(m, bent, {2000, 1e-9, 1}).pass);
}

TEST(Criterion, ConicalAndConsistentImplyConvexity) {
  for (const auto& s : models()) {
    const ModelSpace m(s);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const CheckOptions o{2000, 1e-9, seed};
      if (check_conical(m, o).pass && check_consistent(m, o).pass) {
        EXPECT_TRUE(check_busemann_convexity(m, o).pass) << s.describe();
      }
    }
  }
}

TEST(Reports, SameSeedSameWitness) {
  const ModelSpace m(SpaceDescriptor::lp(2, 4.0));
  const auto a = check_consistent(m, {500, 1e-9, 9});
  const auto b = check_consistent(m, {500, 1e-9, 9});
  EXPECT_EQ(a.worst_violation, b.worst_violation);
  ASSERT_EQ(a.witness.size(), b.witness.size());
  for (std::size_t i = 0; i < a.witness.size(); ++i) EXPECT_EQ(a.witness[i].values, b.witness[i].values);
}

TEST(Reports, CombinePicksWorstPart) {
  CheckReport good{"a", true, 1e-12, 1e-9, {}, 10, 1, {}};
  CheckReport bad{"b", false, 1e-3, 1e-9, {}, 10, 1, {}};
  const auto c = combine_reports("all", {good, bad});
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.worst_violation, 1e-3);
  EXPECT_EQ(c.parts.size(), 2u);
  EXPECT_TRUE(combine_reports("ok", {good}).pass);
}

TEST(Reports, PassIffViolationWithinTolerance) {
  const ModelSpace m(SpaceDescriptor::lp(2, 2.0));
  const auto r = check_geodesic(m, [](double t) { return Point{1.001 * t, 0}; }, 0, 1, {100, 1e-9, 1});
  EXPECT_EQ(r.pass, r.worst_violation <= r.tolerance);
  const auto loose = check_geodesic(m, [](double t) { return Point{1.001 * t, 0}; }, 0, 1, {100, 1e-2, 1});
  EXPECT_TRUE(loose.pass);
}
