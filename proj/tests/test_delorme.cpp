#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wps/delorme.hpp"
#include "wps/wprm_codes.hpp"
#include "wps/zero_sets.hpp"

using wps::WeightSystem;

TEST(Delorme, ReduceDividesTheOtherWeights) {
  const auto step = wps::delorme_reduce(WeightSystem({1, 2, 2}), 0, 2);
  EXPECT_EQ(step.target, WeightSystem({1, 1, 1}));
  const auto s2 = wps::delorme_reduce(WeightSystem({2, 3, 3}), 0, 3);
  EXPECT_EQ(s2.target, WeightSystem({2, 1, 1}));
}

TEST(Delorme, ReduceValidatesInput) {
  EXPECT_THROW(wps::delorme_reduce(WeightSystem({1, 2, 2}), 3, 2), std::invalid_argument);
  EXPECT_THROW(wps::delorme_reduce(WeightSystem({1, 2, 3}), 0, 2), std::invalid_argument);
  EXPECT_THROW(wps::delorme_reduce(WeightSystem({2, 4, 3}), 0, 2), std::invalid_argument);
  EXPECT_THROW(wps::delorme_reduce(WeightSystem({1, 2, 2}), 0, 0), std::invalid_argument);
}

TEST(Delorme, NormalizeReachesWellFormedWeights) {
  for (const auto& w : std::vector<std::vector<int>>{
           {1, 2, 2}, {1, 4, 4}, {1, 16, 16}, {1, 2, 4}, {2, 3, 3}, {6, 10, 15}, {1, 6, 6, 6}}) {
    const WeightSystem ws(w);
    const auto chain = wps::delorme_normalize(ws);
    const WeightSystem end = chain.empty() ? ws : chain.back().target;
    EXPECT_TRUE(wps::is_well_formed(end)) << ws.to_string() << " -> " << end.to_string();
    for (std::size_t i = 1; i < chain.size(); ++i) EXPECT_EQ(chain[i].source, chain[i - 1].target);
  }
  EXPECT_TRUE(wps::delorme_normalize(WeightSystem({2, 3, 5})).empty());
  EXPECT_EQ(wps::delorme_normalize(WeightSystem({1, 16, 16})).back().target,
            WeightSystem({1, 1, 1}));
  EXPECT_EQ(wps::delorme_normalize(WeightSystem({1, 2, 4})).back().target,
            WeightSystem({1, 1, 2}));
}

TEST(Delorme, PointMapIsABijection) {
  for (const char* q : {"2", "3", "4", "5", "7"})
    for (const auto& [w, i, b] : std::vector<std::tuple<std::vector<int>, std::size_t, int>>{
             {{1, 2, 2}, 0, 2}, {{1, 3, 3}, 0, 3}, {{2, 3, 3}, 0, 3}, {{3, 2, 4}, 0, 2},
             {{1, 2, 2, 4}, 0, 2}}) {
      const auto ctx = wps::parse_field(q);
      const auto step = wps::delorme_reduce(WeightSystem(w), i, b);
      const auto src = wps::enumerate_points(step.source, ctx);
      const auto dst = wps::enumerate_points(step.target, ctx);
      std::set<wps::WeightedPoint> image;
      for (const auto& pt : src) {
        const auto img = step.map_point(ctx, pt);
        EXPECT_GE(dst.find(img), 0);
        image.insert(img);
      }
      EXPECT_EQ(image.size(), dst.size()) << step.source.to_string() << " q=" << q;
    }
}

TEST(Delorme, ZeroCountsAndMaximaAgree) {
  std::mt19937_64 rng(17);
  const auto ctx = wps::parse_field("3");
  const auto step = wps::delorme_reduce(WeightSystem({1, 2, 2}), 0, 2);
  const auto src = wps::enumerate_points(step.source, ctx);
  const auto dst = wps::enumerate_points(step.target, ctx);
  for (long d = 2; d <= 6; d += 2) {
    EXPECT_EQ(wps::eq_oracle(ctx, src, d).value, wps::eq_oracle(ctx, dst, d / 2).value);
    std::uniform_int_distribution<std::uint32_t> c(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
      wps::WeightedPolynomial g(step.target, d / 2);
      for (const auto& m : wps::monomial_basis(step.target, d / 2))
        g.set_term(m.exponents, ctx.element(c(rng)));
      if (g.is_zero()) continue;
      const auto f = step.lift_polynomial(g);
      EXPECT_EQ(step.map_polynomial(f), g);
      EXPECT_EQ(wps::count_zeros(ctx, f, src), wps::count_zeros(ctx, g, dst));
    }
  }
  EXPECT_THROW(step.map_polynomial(wps::WeightedPolynomial(step.source, 3)), std::invalid_argument);
}

TEST(Delorme, CodesAgreeAcrossReduction) {
  const auto ctx = wps::parse_field("3");
  const auto step = wps::delorme_reduce(WeightSystem({1, 2, 2}), 0, 2);
  const auto a = wps::code_parameters(
      ctx, wps::build_code(ctx, wps::CodeKind::WPRM, 2, 4, step.source), wps::DminMethod::Exhaustive);
  const auto b = wps::code_parameters(
      ctx, wps::build_code(ctx, wps::CodeKind::WPRM, 2, 2, step.target), wps::DminMethod::Exhaustive);
  EXPECT_EQ(a.k, b.k);
  EXPECT_EQ(a.d_min, b.d_min);
  EXPECT_EQ(a.n, b.n);
}
