#include <gtest/gtest.h>

#include <random>

#include "wps/weighted_poly.hpp"
#include "wps/weighted_space.hpp"

using wps::Exponents;
using wps::WeightedPolynomial;
using wps::WeightSystem;

namespace {

std::uint64_t naive_dim(const WeightSystem& ws, long d) {
  // Counts exponent tuples with every entry at most d.
  std::uint64_t n = 0;
  Exponents e(ws.size(), 0);
  while (true) {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(ws[i]) * e[i];
    if (w == d) ++n;
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > d) e[i++] = 0;
    if (i == e.size()) break;
  }
  return n;
}

WeightedPolynomial random_poly(const wps::FieldCtx& ctx, const WeightSystem& ws, long d,
                               std::mt19937_64& rng) {
  WeightedPolynomial f(ws, d);
  std::uniform_int_distribution<std::uint32_t> c(0, ctx.order() - 1);
  for (const auto& m : wps::monomial_basis(ws, d)) f.set_term(m.exponents, ctx.element(c(rng)));
  return f;
}

}  // namespace

TEST(WeightedPoly, BasisMatchesNaiveCount) {
  for (const auto& w : std::vector<std::vector<int>>{
           {1, 1}, {1, 2}, {2, 3}, {1, 1, 2}, {1, 2, 3}, {2, 3, 5}, {1, 1, 1, 1}, {1, 2, 2, 3}})
    for (long d = 0; d <= 12; ++d) {
      const WeightSystem ws(w);
      const auto basis = wps::monomial_basis(ws, d);
      EXPECT_EQ(basis.size(), naive_dim(ws, d)) << ws.to_string() << " d=" << d;
      EXPECT_EQ(wps::dim_Sd(ws, d), basis.size());
      EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
      for (const auto& m : basis) EXPECT_EQ(m.wdeg, d);
    }
}

TEST(WeightedPoly, PlaneDimensionClosedForms) {
  for (long a = 1; a <= 5; ++a)
    for (long b = a; b <= 6; ++b) {
      const WeightSystem ws({1, static_cast<int>(a), static_cast<int>(b)});
      const long l = std::lcm(a, b);
      for (long d = 0; d <= 4 * l; d += l)
        EXPECT_EQ(wps::dim_closed_form_1ab(a, b, d), wps::dim_Sd(ws, d))
            << "(1," << a << "," << b << ") d=" << d;
    }
  for (long a = 1; a <= 6; ++a)
    for (long d = 0; d <= 30; d += a)
      EXPECT_EQ(wps::dim_closed_form_11a(a, d), wps::dim_Sd(WeightSystem({1, 1, static_cast<int>(a)}), d));
}

TEST(WeightedPoly, F19TableDimensions) {
  EXPECT_EQ(wps::dim_Sd(WeightSystem({1, 1, 1}), 16), 153u);
  EXPECT_EQ(wps::dim_Sd(WeightSystem({1, 2, 2}), 16), 45u);
  EXPECT_EQ(wps::dim_Sd(WeightSystem({1, 2, 4}), 16), 25u);
  EXPECT_EQ(wps::dim_Sd(WeightSystem({1, 2, 8}), 16), 15u);
  EXPECT_EQ(wps::dim_Sd(WeightSystem({1, 4, 4}), 16), 15u);
  EXPECT_EQ(wps::dim_Sd(WeightSystem({1, 16, 16}), 16), 3u);
}

TEST(WeightedPoly, EmptyDegree) {
  EXPECT_EQ(wps::dim_Sd(WeightSystem({2, 3}), 1), 0u);
  EXPECT_EQ(wps::dim_Sd(WeightSystem({3, 4}), 5), 0u);
  EXPECT_EQ(wps::dim_Sd(WeightSystem({3, 4}), 7), 1u);
}

TEST(WeightedPoly, EvaluationIsWeightedHomogeneous) {
  std::mt19937_64 rng(7);
  const auto ctx = wps::parse_field("7");
  for (const auto& w : std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 5}, {1, 1, 2, 4}}) {
    const WeightSystem ws(w);
    for (long d = 1; d <= 10; ++d) {
      const auto f = random_poly(ctx, ws, d, rng);
      std::uniform_int_distribution<std::uint32_t> c(0, 6), u(1, 6);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<wps::FieldElement> x, y;
        const auto lam = ctx.element(u(rng));
        for (std::size_t i = 0; i < ws.size(); ++i) {
          x.push_back(ctx.element(c(rng)));
          y.push_back(ctx.mul(ctx.pow(lam, static_cast<std::uint64_t>(ws[i])), x.back()));
        }
        EXPECT_EQ(wps::evaluate(ctx, f, y),
                  ctx.mul(ctx.pow(lam, static_cast<std::uint64_t>(d)), wps::evaluate(ctx, f, x)));
      }
    }
  }
}

TEST(WeightedPoly, ArithmeticAgreesWithEvaluation) {
  std::mt19937_64 rng(11);
  const auto ctx = wps::parse_field("9");
  const WeightSystem ws({1, 2, 3});
  const auto pts = wps::enumerate_points(ws, ctx);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_poly(ctx, ws, 4, rng), g = random_poly(ctx, ws, 4, rng);
    const auto h = random_poly(ctx, ws, 3, rng);
    const auto s = wps::add(ctx, f, g), p = wps::multiply(ctx, f, h);
    const auto c = ctx.element(5);
    const auto sc = wps::scale(ctx, f, c);
    EXPECT_EQ(p.degree(), 7);
    for (const auto& pt : pts) {
      const auto vf = wps::evaluate(ctx, f, pt.coords), vg = wps::evaluate(ctx, g, pt.coords);
      const auto vh = wps::evaluate(ctx, h, pt.coords);
      EXPECT_EQ(wps::evaluate(ctx, s, pt.coords), ctx.add(vf, vg));
      EXPECT_EQ(wps::evaluate(ctx, p, pt.coords), ctx.mul(vf, vh));
      EXPECT_EQ(wps::evaluate(ctx, sc, pt.coords), ctx.mul(c, vf));
    }
  }
  EXPECT_THROW(wps::add(ctx, random_poly(ctx, ws, 4, rng), random_poly(ctx, ws, 3, rng)),
               std::invalid_argument);
}

TEST(WeightedPoly, SubstitutionComposesWithEvaluation) {
  std::mt19937_64 rng(3);
  const auto ctx = wps::parse_field("5");
  const WeightSystem ws({1, 2, 3});
  const auto f = random_poly(ctx, ws, 6, rng);
  const auto g = random_poly(ctx, ws, 3, rng);
  const auto h = wps::substitute(ctx, f, 2, g);
  EXPECT_EQ(h.degree(), 6);
  for (const auto& pt : wps::enumerate_points(ws, ctx)) {
    auto x = pt.coords;
    x[2] = wps::evaluate(ctx, g, pt.coords);
    EXPECT_EQ(wps::evaluate(ctx, h, pt.coords), wps::evaluate(ctx, f, x));
  }
  EXPECT_THROW(wps::substitute(ctx, f, 1, g), std::invalid_argument);
}

TEST(WeightedPoly, TermsMustHaveTheDeclaredDegree) {
  const auto ctx = wps::parse_field("3");
  WeightedPolynomial f(WeightSystem({1, 2}), 4);
  EXPECT_NO_THROW(f.add_term(ctx, {2, 1}, ctx.one()));
  EXPECT_THROW(f.add_term(ctx, {1, 1}, ctx.one()), std::invalid_argument);
  EXPECT_THROW(f.add_term(ctx, {1, 1, 0}, ctx.one()), std::invalid_argument);
  f.add_term(ctx, {2, 1}, ctx.element(2));
  EXPECT_TRUE(f.is_zero());
}

TEST(WeightedPoly, ParseAndPrintRoundTrip) {
  const auto ctx = wps::parse_field("7");
  const WeightSystem ws({1, 2, 3});
  const auto f = wps::parse_polynomial("3*X0^6 + 2*X1^3 + X0*X1*X2 + 6*X2^2", ws, ctx);
  EXPECT_EQ(f.degree(), 6);
  EXPECT_EQ(f.term_count(), 4u);
  EXPECT_EQ(wps::parse_polynomial(wps::to_string(f), ws, ctx), f);
  EXPECT_THROW(wps::parse_polynomial("X0 + X1", ws, ctx), std::invalid_argument);
  EXPECT_THROW(wps::parse_polynomial("9*X0", ws, ctx), std::invalid_argument);
  EXPECT_THROW(wps::parse_polynomial("X3", ws, ctx), std::invalid_argument);
  EXPECT_THROW(wps::parse_polynomial("", ws, ctx), std::invalid_argument);
}

TEST(WeightedPoly, DehomogenizeAndHomogenize) {
  std::mt19937_64 rng(5);
  const auto ctx = wps::parse_field("4");
  const WeightSystem ws({1, 1, 3});
  for (long d = 3; d <= 8; ++d) {
    auto f = random_poly(ctx, ws, d, rng);
    f.set_term({0, static_cast<int>(d), 0}, ctx.one());  // a term free of X0 fixes the degree
    const auto a = wps::dehomogenize_chart0(f);
    EXPECT_EQ(wps::homogenize_chart0(a, ws), f);
    for (std::uint32_t y1 = 0; y1 < 4; ++y1)
      for (std::uint32_t y2 = 0; y2 < 4; ++y2) {
        const std::vector<wps::FieldElement> y{ctx.element(y1), ctx.element(y2)};
        EXPECT_EQ(wps::evaluate(ctx, a, y),
                  wps::evaluate(ctx, f, std::vector{ctx.one(), y[0], y[1]}));
      }
  }
  EXPECT_THROW(wps::dehomogenize_chart0(WeightedPolynomial(WeightSystem({2, 3}), 6)),
               std::invalid_argument);
}
