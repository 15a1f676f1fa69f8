#pragma once

// Lines of the weighted projective plane P(1, a1, a2), a1 < a2 coprime:
//   type 0: X0 = 0
//   type 1: alpha X0^{a1} + X1 = 0
//   type 2: alpha X0^{a2} + beta X1 X0^{a2-a1} + X2 = 0

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wps/errors.hpp"
#include "wps/weighted_poly.hpp"
#include "wps/weighted_space.hpp"

namespace wps {

enum class LineKind { Type0 = 0, Type1 = 1, Type2 = 2 };

struct PlaneLine {
  LineKind kind = LineKind::Type0;
  FieldElement alpha, beta;

  friend bool operator==(const PlaneLine& a, const PlaneLine& b) {
    return a.kind == b.kind && a.alpha == b.alpha && a.beta == b.beta;
  }

  std::string to_string() const {
    switch (kind) {
      case LineKind::Type0: return "type0";
      case LineKind::Type1: return "type1(" + std::to_string(alpha.index()) + ")";
      default:
        return "type2(" + std::to_string(alpha.index()) + "," +
               std::to_string(beta.index()) + ")";
    }
  }
};

/// Graded change of coordinates X_var <- replacement; `inverse` undoes it.
struct Substitution {
  std::size_t var = 0;
  WeightedPolynomial replacement;
  WeightedPolynomial inverse;

  WeightedPolynomial apply(const FieldCtx& ctx, const WeightedPolynomial& f) const {
    return substitute(ctx, f, var, replacement);
  }
  WeightedPolynomial undo(const FieldCtx& ctx, const WeightedPolynomial& f) const {
    return substitute(ctx, f, var, inverse);
  }
};

class LineSystem {
 public:
  LineSystem(const WeightSystem& ws, const FieldCtx& ctx)
      : ws_(validated(ws)), ctx_(&ctx), pts_(enumerate_points(ws_, ctx)) {}

  const WeightSystem& weights() const { return ws_; }
  const PointSet& points() const { return pts_; }
  int a1() const { return ws_[1]; }
  int a2() const { return ws_[2]; }

  /// Type 0, then type 1 by alpha, then type 2 by (alpha, beta).
  std::vector<PlaneLine> catalog() const {
    const std::uint32_t q = ctx_->order();
    std::vector<PlaneLine> out;
    out.reserve(1 + q + static_cast<std::size_t>(q) * q);
    out.push_back({LineKind::Type0, {}, {}});
    for (std::uint32_t a = 0; a < q; ++a)
      out.push_back({LineKind::Type1, ctx_->element(a), {}});
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        out.push_back({LineKind::Type2, ctx_->element(a), ctx_->element(b)});
    return out;
  }

  WeightedPolynomial line_form(const PlaneLine& l) const {
    const FieldCtx& ctx = *ctx_;
    switch (l.kind) {
      case LineKind::Type0:
        return WeightedPolynomial::monomial(ws_, {1, 0, 0}, ctx.one());
      case LineKind::Type1: {
        WeightedPolynomial f(ws_, a1());
        f.add_term(ctx, {a1(), 0, 0}, l.alpha);
        f.add_term(ctx, {0, 1, 0}, ctx.one());
        return f;
      }
      default: {
        WeightedPolynomial f(ws_, a2());
        f.add_term(ctx, {a2(), 0, 0}, l.alpha);
        f.add_term(ctx, {a2() - a1(), 1, 0}, l.beta);
        f.add_term(ctx, {0, 0, 1}, ctx.one());
        return f;
      }
    }
  }

  std::vector<WeightedPoint> line_points(const PlaneLine& l) const {
    const WeightedPolynomial f = line_form(l);
    std::vector<WeightedPoint> out;
    for (const auto& pt : pts_)
      if (evaluate(*ctx_, f, pt.coords).is_zero()) out.push_back(pt);
    return out;
  }

  std::vector<WeightedPoint> intersect(const PlaneLine& l1, const PlaneLine& l2) const {
    if (l1 == l2) throw InvalidArgument("cannot intersect a line with itself");
    const auto p1 = line_points(l1), p2 = line_points(l2);
    std::vector<WeightedPoint> out;
    std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(out));
    return out;
  }

  /// Substitution taking the line to X_kind = 0.
  Substitution normalize_line(const PlaneLine& l) const {
    const FieldCtx& ctx = *ctx_;
    const auto var = static_cast<std::size_t>(l.kind);
    const Exponents unit = var == 0 ? Exponents{1, 0, 0}
                           : var == 1 ? Exponents{0, 1, 0}
                                      : Exponents{0, 0, 1};
    WeightedPolynomial fwd = WeightedPolynomial::monomial(ws_, unit, ctx.one());
    WeightedPolynomial back = fwd;
    if (l.kind == LineKind::Type1) {
      fwd.add_term(ctx, {a1(), 0, 0}, ctx.neg(l.alpha));
      back.add_term(ctx, {a1(), 0, 0}, l.alpha);
    } else if (l.kind == LineKind::Type2) {
      fwd.add_term(ctx, {a2(), 0, 0}, ctx.neg(l.alpha));
      fwd.add_term(ctx, {a2() - a1(), 1, 0}, ctx.neg(l.beta));
      back.add_term(ctx, {a2(), 0, 0}, l.alpha);
      back.add_term(ctx, {a2() - a1(), 1, 0}, l.beta);
    }
    return {var, std::move(fwd), std::move(back)};
  }

 private:
  static WeightSystem validated(const WeightSystem& ws) {
    if (ws.size() != 3 || ws[0] != 1 || ws[1] >= ws[2] || std::gcd(ws[1], ws[2]) != 1)
      throw InvalidArgument("lines need weights (1, a1, a2) with a1 < a2 coprime, got (" +
                            ws.to_string() + ")");
    return ws;
  }

  WeightSystem ws_;
  const FieldCtx* ctx_;
  PointSet pts_;
};

}  // namespace wps
