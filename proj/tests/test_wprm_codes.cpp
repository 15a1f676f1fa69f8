#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>
#include <tuple>

#include "wps/wprm_codes.hpp"

using wps::CodeKind;
using wps::DminMethod;
using wps::WeightSystem;

namespace {

struct Brute {
  std::uint64_t k = 0, d_min = 0;
};

// Encodes every message polynomial; k from the number of distinct codewords.
Brute brute_code(const wps::FieldCtx& ctx, const wps::CodeInstance& code) {
  const auto& basis = code.monomials;
  std::vector<std::uint32_t> c(basis.size(), 0);
  std::set<std::vector<wps::FieldElement>> words;
  std::uint64_t best = code.length() + 1;
  while (true) {
    wps::WeightedPolynomial f(code.ws, code.d);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (c[j]) f.set_term(basis[j].exponents, ctx.element(c[j]));
    const auto word = wps::encode(ctx, code, f);
    const auto w = wps::weight(word);
    if (w > 0) best = std::min(best, w);
    words.insert(word);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == ctx.order()) c[i++] = 0;
    if (i == c.size()) break;
  }
  std::uint64_t k = 0;
  for (std::uint64_t s = words.size(); s > 1; s /= ctx.order()) ++k;
  return {k, best};
}

}  // namespace

TEST(WprmCodes, SmallExampleFromDefinition) {
  const auto ctx = wps::parse_field("3");
  const auto code = wps::build_code(ctx, CodeKind::WPRM, 2, 2, WeightSystem({1, 1, 2}));
  const auto p = wps::code_parameters(ctx, code, DminMethod::Exhaustive);
  EXPECT_EQ(p.n, 13u);
  EXPECT_EQ(p.k, 4u);
  EXPECT_EQ(p.d_min, 6u);
  const auto b = brute_code(ctx, code);
  EXPECT_EQ(b.k, 4u);
  EXPECT_EQ(b.d_min, 6u);
}

TEST(WprmCodes, ClassicalCodes) {
  const auto f3 = wps::parse_field("3");
  const auto rm = wps::code_parameters(f3, wps::build_code(f3, CodeKind::RM, 2, 1));
  EXPECT_EQ(rm.n, 9u);
  EXPECT_EQ(rm.k, 3u);
  EXPECT_EQ(rm.d_min, 6u);
  EXPECT_TRUE(rm.cross_checked);
  const auto prm = wps::code_parameters(f3, wps::build_code(f3, CodeKind::PRM, 2, 2));
  EXPECT_EQ(prm.n, 13u);
  EXPECT_EQ(prm.k, 6u);
  EXPECT_EQ(prm.d_min, 6u);
  EXPECT_TRUE(prm.cross_checked);
}

TEST(WprmCodes, ExhaustiveMatchesBruteForce) {
  for (const char* q : {"2", "3"})
    for (const auto& [kind, w, d] : std::vector<std::tuple<CodeKind, std::vector<int>, long>>{
             {CodeKind::RM, {1, 1, 1}, 1},
             {CodeKind::PRM, {1, 1, 1}, 1},
             {CodeKind::PRM, {1, 1, 1}, 2},
             {CodeKind::PRM, {1, 1}, 3},
             {CodeKind::WPRM, {1, 1, 2}, 2},
             {CodeKind::WPRM, {1, 2, 3}, 6},
             {CodeKind::WPRM, {1, 2, 2}, 4},
             {CodeKind::WPRM, {1, 1, 3}, 3},
             {CodeKind::WPRM, {2, 3}, 6}}) {
      const auto ctx = wps::parse_field(q);
      const WeightSystem ws(w);
      const auto code = wps::build_code(ctx, kind, ws.dim(), d, ws);
      if (std::pow(ctx.order(), code.monomials.size()) > 2e5) continue;
      const auto b = brute_code(ctx, code);
      const auto p = wps::code_parameters(ctx, code, DminMethod::Exhaustive);
      EXPECT_EQ(p.k, b.k) << ws.to_string() << " q=" << q << " d=" << d;
      EXPECT_EQ(p.d_min, b.d_min) << ws.to_string() << " q=" << q << " d=" << d;
      EXPECT_EQ(wps::rank(ctx, code.generator), p.k);
    }
}

TEST(WprmCodes, FormulaAgreesWithExhaustiveOnPlanes) {
  for (const char* q : {"2", "3", "4"})
    for (const auto& w : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 3}, {1, 1, 3}, {1, 2, 4}}) {
      const auto ctx = wps::parse_field(q);
      const WeightSystem ws(w);
      for (long d = ws.lcm(); d <= 3 * ws.lcm(); d += ws.lcm()) {
        const auto code = wps::build_code(ctx, CodeKind::WPRM, 2, d, ws);
        const auto f = wps::dmin_formula(code);
        if (!f) continue;
        if (wps::projective_candidates(ctx.order(), wps::rank(ctx, code.generator)) > 2e6) continue;
        EXPECT_EQ(f->d_min, wps::min_distance_exhaustive(ctx, code))
            << ws.to_string() << " q=" << q << " d=" << d;
        const auto wit = wps::dmin_witness(ctx, code);
        ASSERT_TRUE(wit);
        EXPECT_EQ(wps::weight(wps::encode(ctx, code, *wit)), f->d_min);
      }
    }
}

TEST(WprmCodes, EncodingIsLinear) {
  const auto ctx = wps::parse_field("5");
  const WeightSystem ws({1, 2, 3});
  const auto code = wps::build_code(ctx, CodeKind::WPRM, 2, 6, ws);
  const auto f = wps::parse_polynomial("X0^6 + 2*X1^3 + 3*X2^2", ws, ctx);
  const auto g = wps::parse_polynomial("4*X0*X1*X2 + X0^2*X1^2", ws, ctx);
  const auto ef = wps::encode(ctx, code, f), eg = wps::encode(ctx, code, g);
  const auto es = wps::encode(ctx, code, wps::add(ctx, f, wps::scale(ctx, g, ctx.element(3))));
  for (std::size_t i = 0; i < ef.size(); ++i)
    EXPECT_EQ(es[i], ctx.add(ef[i], ctx.mul(ctx.element(3), eg[i])));
}

TEST(WprmCodes, NormalizationMakesColumnsScaleInvariant) {
  // Any representative of a point gives the same column value.
  const auto ctx = wps::parse_field("7");
  const WeightSystem ws({1, 2, 3});
  const auto f = wps::parse_polynomial("X0^6 + X1^3 + 5*X2^2 + X0*X1*X2", ws, ctx);
  for (const auto& pt : wps::enumerate_points(ws, ctx))
    for (const auto& r : wps::representatives(ws, ctx, pt.coords))
      EXPECT_EQ(wps::wprm_encode_column(ctx, f, {r, pt.chart}), wps::wprm_encode_column(ctx, f, pt));
}

TEST(WprmCodes, F19Table) {
  const auto ctx = wps::parse_field("19");
  const auto rows = wps::comparison_table(ctx, 16, wps::plane_table_entries());
  ASSERT_EQ(rows.size(), 7u);
  const std::vector<std::array<std::uint64_t, 3>> triples{
      {361, 153, 57}, {381, 153, 76}, {381, 45, 228}, {381, 25, 228},
      {381, 15, 228}, {381, 15, 304}, {381, 3, 361}};
  const std::vector<std::string> lambdas{"0.581", "0.601", "0.716", "0.664", "0.637", "0.837", "0.955"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, triples[i][0]);
    EXPECT_EQ(rows[i].k, triples[i][1]);
    EXPECT_EQ(rows[i].d_min, triples[i][2]);
    EXPECT_EQ(wps::truncate_decimal(rows[i].lambda), lambdas[i]);
    ASSERT_TRUE(rows[i].witness_weight);
    EXPECT_EQ(*rows[i].witness_weight, rows[i].d_min);
  }
  const auto cmp = wps::lambda_compare(rows);
  EXPECT_TRUE(cmp.ok());
  EXPECT_EQ(cmp.ranking.front(), 6u);
  EXPECT_EQ(cmp.ranking.back(), 0u);
}

TEST(WprmCodes, TruncationNeverRoundsUp) {
  EXPECT_EQ(wps::truncate_decimal(wps::Rational(2, 3)), "0.666");
  EXPECT_EQ(wps::truncate_decimal(wps::Rational(1, 1)), "1.000");
  EXPECT_EQ(wps::truncate_decimal(wps::Rational(999, 1000)), "0.999");
  EXPECT_EQ(wps::truncate_decimal(wps::Rational(19999, 10000)), "1.999");
  EXPECT_EQ(wps::rational_string(wps::Rational(210, 361)), "210/361");
}

TEST(WprmCodes, LambdaThresholdChecks) {
  // d <= q so the threshold comparisons apply.
  for (std::uint32_t q : {7u, 11u, 13u}) {
    const auto ctx = wps::parse_field(std::to_string(q));
    const auto rows = wps::comparison_table(
        ctx, 4, {{CodeKind::PRM, std::nullopt}, {CodeKind::WPRM, WeightSystem({1, 2, 2})},
                 {CodeKind::WPRM, WeightSystem({1, 2, 4})}});
    const auto cmp = wps::lambda_compare(rows);
    EXPECT_FALSE(cmp.checks.empty());
    EXPECT_TRUE(cmp.ok());
  }
}

TEST(WprmCodes, MatrixExport) {
  const auto ctx = wps::parse_field("3");
  const auto code = wps::build_code(ctx, CodeKind::WPRM, 2, 2, WeightSystem({1, 1, 2}));
  const auto text = wps::matrix_text(code);
  EXPECT_EQ(text.substr(0, text.find('\n')), "3 2 2 1,1,2 13 4");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(WprmCodes, InvalidRequests) {
  const auto ctx = wps::parse_field("3");
  EXPECT_THROW(wps::parse_code_kind("bch"), std::invalid_argument);
  EXPECT_THROW(wps::parse_dmin_method("fast"), std::invalid_argument);
  EXPECT_THROW(wps::build_code(ctx, CodeKind::WPRM, 2, 3, WeightSystem({1, 1, 2})),
               std::invalid_argument);
  EXPECT_THROW(wps::build_code(ctx, CodeKind::WPRM, 2, 2), std::invalid_argument);
  EXPECT_THROW(wps::build_code(ctx, CodeKind::PRM, 0, 2), std::invalid_argument);
  const auto big = wps::build_code(ctx, CodeKind::PRM, 2, 9);
  EXPECT_THROW(wps::code_parameters(ctx, big, DminMethod::Formula), std::invalid_argument);
  EXPECT_THROW(wps::code_parameters(ctx, big, DminMethod::Exhaustive, 1000), wps::BudgetExceeded);
}
