#include <gtest/gtest.h>

#include <random>

#include "wps/plane_lines.hpp"
#include "wps/verify.hpp"

using wps::LineKind;
using wps::PlaneLine;
using wps::WeightSystem;

TEST(PlaneLines, CatalogShapeAndOrder) {
  const auto ctx = wps::parse_field("4");
  const wps::LineSystem sys(WeightSystem({1, 2, 3}), ctx);
  const auto lines = sys.catalog();
  ASSERT_EQ(lines.size(), 21u);
  EXPECT_EQ(lines[0].kind, LineKind::Type0);
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_EQ(lines[i].kind, LineKind::Type1);
    EXPECT_EQ(lines[i].alpha.index(), i - 1);
  }
  EXPECT_EQ(lines[5].kind, LineKind::Type2);
  EXPECT_EQ(lines[6].beta.index(), 1u);
  EXPECT_EQ(lines[20].to_string(), "type2(3,3)");
}

TEST(PlaneLines, EveryLineHasQPlusOnePoints) {
  for (const char* q : {"2", "3", "5", "8"})
    for (const auto& w : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 3}, {1, 3, 4}, {1, 2, 5}}) {
      const auto ctx = wps::parse_field(q);
      const wps::LineSystem sys(WeightSystem(w), ctx);
      for (const auto& l : sys.catalog())
        EXPECT_EQ(sys.line_points(l).size(), ctx.order() + 1u) << l.to_string();
    }
}

TEST(PlaneLines, LineAtInfinityIsAWeightedLine) {
  const auto ctx = wps::parse_field("5");
  const wps::LineSystem sys(WeightSystem({1, 2, 3}), ctx);
  const auto pts = sys.line_points({LineKind::Type0, {}, {}});
  const auto sub = wps::enumerate_points(WeightSystem({2, 3}), ctx);
  ASSERT_EQ(pts.size(), sub.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_TRUE(pts[i].coords[0].is_zero());
    EXPECT_EQ(pts[i].coords[1], sub[i].coords[0]);
    EXPECT_EQ(pts[i].coords[2], sub[i].coords[1]);
  }
}

TEST(PlaneLines, DistinctLinesMeet) {
  const auto ctx = wps::parse_field("3");
  const wps::LineSystem sys(WeightSystem({1, 2, 3}), ctx);
  const auto lines = sys.catalog();
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      EXPECT_FALSE(sys.intersect(lines[i], lines[j]).empty())
          << lines[i].to_string() << " " << lines[j].to_string();
  EXPECT_THROW(sys.intersect(lines[3], lines[3]), std::invalid_argument);
}

TEST(PlaneLines, TypeOneLinesAreDisjointOffInfinity) {
  // alpha X0^{a1} + X1 = 0 for two alphas share only the point (0:0:1).
  const auto ctx = wps::parse_field("5");
  const wps::LineSystem sys(WeightSystem({1, 2, 3}), ctx);
  const auto meet = sys.intersect({LineKind::Type1, ctx.element(1), {}},
                                  {LineKind::Type1, ctx.element(2), {}});
  ASSERT_EQ(meet.size(), 1u);
  EXPECT_TRUE(meet[0].coords[0].is_zero());
  EXPECT_TRUE(meet[0].coords[1].is_zero());
}

TEST(PlaneLines, NormalizationSendsLineToCoordinateLine) {
  const auto ctx = wps::parse_field("7");
  const WeightSystem ws({1, 2, 5});
  const wps::LineSystem sys(ws, ctx);
  for (const auto& l : sys.catalog()) {
    const auto sub = sys.normalize_line(l);
    wps::Exponents unit(3, 0);
    unit[sub.var] = 1;
    EXPECT_EQ(sub.apply(ctx, sys.line_form(l)), wps::WeightedPolynomial::monomial(ws, unit, ctx.one()));
    EXPECT_EQ(sub.undo(ctx, sub.apply(ctx, sys.line_form(l))), sys.line_form(l));
  }
}

TEST(PlaneLines, IncidenceChecks) {
  std::mt19937_64 rng(1);
  for (const char* q : {"2", "3", "4"})
    for (const auto& w : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 3}, {1, 3, 4}}) {
      wps::SuiteReport rep("lines", 1);
      wps::check_line_incidences(WeightSystem(w), wps::parse_field(q), rng, rep);
      EXPECT_TRUE(rep.passed()) << (rep.failures.empty() ? "" : rep.failures.front());
    }
}

TEST(PlaneLines, RejectsUnsupportedWeights) {
  const auto ctx = wps::parse_field("3");
  for (const auto& w : std::vector<std::vector<int>>{{1, 2, 2}, {1, 2, 4}, {2, 3, 5}, {1, 3, 2}, {1, 2}})
    EXPECT_THROW(wps::LineSystem(WeightSystem(w), ctx), std::invalid_argument);
}
