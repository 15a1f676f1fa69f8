#pragma once

// Zero sets of weighted homogeneous polynomials: counting, the product
// families of primitive pairs, the exhaustive e_q search and bound checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wps/errors.hpp"
#include "wps/finite_field.hpp"
#include "wps/parallel.hpp"
#include "wps/weighted_poly.hpp"
#include "wps/weighted_space.hpp"

namespace wps {

inline constexpr std::uint64_t kDefaultCandidateBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultSharpnessBudget = 1'000'000;

inline void check_same_space(const WeightedPolynomial& f, const PointSet& pts) {
  if (f.weights() != pts.weights())
    throw InvalidArgument("polynomial on P(" + f.weights().to_string() +
                          ") evaluated on P(" + pts.weights().to_string() + ")");
}

/// |V(F)| over the enumerated rational points.
inline std::uint64_t count_zeros(const FieldCtx& ctx, const WeightedPolynomial& f,
                                 const PointSet& pts) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial vanishes everywhere");
  check_same_space(f, pts);
  std::uint64_t n = 0;
  for (const auto& pt : pts)
    if (evaluate(ctx, f, pt.coords).is_zero()) ++n;
  return n;
}

/// Zeros with x_0 != 0.
inline std::uint64_t count_affine_zeros(const FieldCtx& ctx, const WeightedPolynomial& f,
                                        const PointSet& pts) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial vanishes everywhere");
  check_same_space(f, pts);
  std::uint64_t n = 0;
  for (const auto& pt : pts)
    if (pt.chart == 0 && evaluate(ctx, f, pt.coords).is_zero()) ++n;
  return n;
}

namespace detail {

// s = sum_j c_j * rows[j], rows stored contiguously with n entries each.
inline std::vector<std::uint32_t> combine_rows(const FieldCtx& ctx, const std::uint32_t* rows,
                                               std::size_t n,
                                               std::span<const std::uint32_t> c) {
  std::vector<std::uint32_t> s(n, 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const std::uint32_t* r = rows + j * n;
    for (std::size_t p = 0; p < n; ++p) s[p] = ctx.add_idx(s[p], ctx.mul_idx(c[j], r[p]));
  }
  return s;
}

}  // namespace detail

/// Monomial values of S_d at every point, so that evaluating a polynomial
/// given by its coefficient vector costs one dot product per point. The field
/// context and point set must outlive the counter.
class ZeroCounter {
 public:
  ZeroCounter(const FieldCtx& ctx, const PointSet& pts, long d)
      : ctx_(&ctx), pts_(&pts), degree_(d), basis_(monomial_basis(pts.weights(), d)) {
    const std::size_t n = pts.size();
    values_.resize(basis_.size() * n);
    for (std::size_t j = 0; j < basis_.size(); ++j)
      for (std::size_t p = 0; p < n; ++p)
        values_[j * n + p] = evaluate_monomial(ctx, basis_[j].exponents, pts[p].coords).index();
  }

  const FieldCtx& field() const { return *ctx_; }
  const PointSet& points() const { return *pts_; }
  long degree() const { return degree_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t point_count() const { return pts_->size(); }
  std::uint32_t value(std::size_t j, std::size_t p) const {
    return values_[j * pts_->size() + p];
  }
  const std::uint32_t* row(std::size_t j) const { return values_.data() + j * pts_->size(); }

  /// Coefficient indices of f in basis order.
  std::vector<std::uint32_t> coefficients(const WeightedPolynomial& f) const {
    check_same_space(f, *pts_);
    if (f.degree() != degree_)
      throw InvalidArgument("polynomial degree " + std::to_string(f.degree()) +
                            " differs from the counter degree " + std::to_string(degree_));
    std::vector<std::uint32_t> c(basis_.size(), 0);
    for (const auto& [e, coeff] : f.terms()) {
      auto it = std::lower_bound(basis_.begin(), basis_.end(), e,
                                 [](const Monomial& m, const Exponents& x) {
                                   return m.exponents < x;
                                 });
      c[static_cast<std::size_t>(it - basis_.begin())] = coeff.index();
    }
    return c;
  }

  WeightedPolynomial polynomial(std::span<const std::uint32_t> coeffs) const {
    WeightedPolynomial f(pts_->weights(), degree_);
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (coeffs[j] != 0) f.set_term(basis_[j].exponents, ctx_->element(coeffs[j]));
    return f;
  }

  /// Values F(x) for every point, as field indices.
  std::vector<std::uint32_t> evaluations(std::span<const std::uint32_t> coeffs) const {
    return detail::combine_rows(*ctx_, values_.data(), pts_->size(), coeffs);
  }

  std::uint64_t count(std::span<const std::uint32_t> coeffs) const {
    const auto s = evaluations(coeffs);
    return static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 0u));
  }

  std::uint64_t count(const WeightedPolynomial& f) const {
    if (f.is_zero()) throw InvalidArgument("the zero polynomial vanishes everywhere");
    return count(coefficients(f));
  }

 private:
  const FieldCtx* ctx_;
  const PointSet* pts_;
  long degree_;
  std::vector<Monomial> basis_;
  std::vector<std::uint32_t> values_;
};

/// Number of nonzero coefficient vectors of length k up to scaling.
inline long double projective_candidates(std::uint32_t q, std::size_t k) {
  return (ipow_ld(q, static_cast<unsigned>(k)) - 1) / (q - 1);
}

struct SweepBest {
  std::uint64_t value = 0;
  std::uint64_t index = 0;
  std::vector<std::uint32_t> coeffs;
};

namespace detail {

// Candidate g of the projectivized sweep: block L holds the q^{k-1-L} vectors
// whose first nonzero coefficient sits at position L and equals 1; inside a
// block the trailing coefficients count up in base q, last position fastest.
inline int decode_candidate(std::uint64_t g, std::uint32_t q, std::size_t k,
                            std::vector<std::uint32_t>& c) {
  std::fill(c.begin(), c.end(), 0u);
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::uint64_t block = ipow(q, static_cast<unsigned>(k - 1 - lead));
    if (g < block) {
      c[lead] = 1;
      for (std::size_t j = k; j-- > lead + 1;) {
        c[j] = static_cast<std::uint32_t>(g % q);
        g /= q;
      }
      return static_cast<int>(lead);
    }
    g -= block;
  }
  throw InvalidArgument("candidate index out of range");
}

}  // namespace detail

/// Visits every nonzero combination of the k rows up to scaling and returns
/// the one with the most zero entries (ties go to the smallest candidate
/// index). Deterministic for any thread count.
inline SweepBest sweep_max_zeros(const FieldCtx& ctx, const std::uint32_t* rows, std::size_t k,
                                 std::size_t n, unsigned threads = thread_count()) {
  const std::uint32_t q = ctx.order();
  if (k == 0) return {};
  const std::uint64_t total = (ipow(q, static_cast<unsigned>(k)) - 1) / (q - 1);
  std::vector<SweepBest> partial(chunk_count(total, threads));
  parallel_chunks(
      total,
      [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint32_t> c(k);
        int lead = detail::decode_candidate(begin, q, k, c);
        std::vector<std::uint32_t> s = detail::combine_rows(ctx, rows, n, c);
        SweepBest best;
        bool have = false;
        for (std::uint64_t g = begin; g < end; ++g) {
          const auto zeros = static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 0u));
          if (!have || zeros > best.value) {
            have = true;
            best.value = zeros;
            best.index = g;
            best.coeffs = c;
            if (zeros == n) break;
          }
          if (g + 1 == end) break;
          std::size_t j = k - 1;
          for (; j > static_cast<std::size_t>(lead); --j) {
            const std::uint32_t old = c[j];
            const std::uint32_t next = old + 1 == q ? 0 : old + 1;
            const std::uint32_t diff = ctx.add_idx(next, ctx.neg_idx(old));
            const std::uint32_t* r = rows + j * n;
            for (std::size_t p = 0; p < n; ++p)
              s[p] = ctx.add_idx(s[p], ctx.mul_idx(diff, r[p]));
            c[j] = next;
            if (next != 0) break;
          }
          if (j == static_cast<std::size_t>(lead)) {
            lead = detail::decode_candidate(g + 1, q, k, c);
            s = detail::combine_rows(ctx, rows, n, c);
          }
        }
        partial[chunk] = std::move(best);
      },
      threads);
  SweepBest out = partial.front();
  for (std::size_t i = 1; i < partial.size(); ++i)
    if (partial[i].value > out.value) out = partial[i];
  return out;
}

inline SweepBest sweep_max_zeros(const ZeroCounter& zc, unsigned threads = thread_count()) {
  return sweep_max_zeros(zc.field(), zc.row(0), zc.dimension(), zc.point_count(), threads);
}

struct EqResult {
  bool defined = false;  // false when S_d = 0
  std::uint64_t value = 0;
  std::optional<WeightedPolynomial> witness;
  std::uint64_t candidates = 0;
};

/// Exact e_q(d; a): the maximum of |V(F)| over nonzero F in S_d.
inline EqResult eq_oracle(const FieldCtx& ctx, const PointSet& pts, long d,
                          std::uint64_t budget = kDefaultCandidateBudget) {
  ZeroCounter zc(ctx, pts, d);
  EqResult out;
  if (zc.dimension() == 0) return out;
  const long double est = projective_candidates(ctx.order(), zc.dimension());
  if (est > static_cast<long double>(budget))
    throw BudgetExceeded("e_q search over S_" + std::to_string(d) + " of P(" +
                             pts.weights().to_string() + ") with " +
                             std::to_string(zc.dimension()) + " monomials",
                         est, budget);
  SweepBest best = sweep_max_zeros(zc);
  out.defined = true;
  out.value = best.value;
  out.witness = zc.polynomial(best.coeffs);
  out.candidates = static_cast<std::uint64_t>(est);
  return out;
}

inline EqResult eq_oracle(const WeightSystem& ws, long d, const FieldCtx& ctx,
                          std::uint64_t budget = kDefaultCandidateBudget) {
  const auto k = dim_Sd(ws, d);
  if (k > 0 && projective_candidates(ctx.order(), k) > static_cast<long double>(budget))
    throw BudgetExceeded("e_q search over S_" + std::to_string(d) + " of P(" +
                             ws.to_string() + ") with " + std::to_string(k) + " monomials",
                         projective_candidates(ctx.order(), k), budget);
  const PointSet pts = enumerate_points(ws, ctx);
  return eq_oracle(ctx, pts, d, budget);
}

/// (M0, M1): nonconstant monomials of equal degree with disjoint supports and
/// jointly coprime exponents.
struct PrimitivePair {
  Monomial m0, m1;
  int s0 = 0, s1 = 0;

  static PrimitivePair make(const WeightSystem& ws, Exponents e0, Exponents e1) {
    PrimitivePair pair{Monomial(ws, std::move(e0)), Monomial(ws, std::move(e1)), 0, 0};
    if (pair.m0.is_constant() || pair.m1.is_constant())
      throw InvalidArgument("primitive pair monomials must be nonconstant");
    if (pair.m0.wdeg != pair.m1.wdeg)
      throw InvalidArgument("primitive pair monomials have degrees " +
                            std::to_string(pair.m0.wdeg) + " and " +
                            std::to_string(pair.m1.wdeg));
    std::vector<int> all;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const int r0 = pair.m0.exponents[i], r1 = pair.m1.exponents[i];
      if (r0 > 0 && r1 > 0)
        throw InvalidArgument("primitive pair monomials share the variable X" +
                              std::to_string(i));
      if (r0 > 0) all.push_back(r0);
      if (r1 > 0) all.push_back(r1);
    }
    if (gcd_of(all) != 1)
      throw InvalidArgument("exponents of a primitive pair must be jointly coprime");
    pair.s0 = pair.m0.support_size();
    pair.s1 = pair.m1.support_size();
    return pair;
  }
};

/// F = mu0 * mu1 * prod_i (M0 - t_i M1).
struct FamilySpec {
  PrimitivePair pair;
  std::vector<FieldElement> t;
  Exponents mu0, mu1;

  int ell() const { return static_cast<int>(t.size()); }
  int sigma0() const { return count_support(mu0); }
  int sigma1() const { return count_support(mu1); }

  void validate(const WeightSystem& ws, const FieldCtx& ctx) const {
    if (pair.m0.exponents.size() != ws.size() || mu0.size() != ws.size() ||
        mu1.size() != ws.size())
      throw InvalidArgument("family data does not match P(" + ws.to_string() + ")");
    if (t.size() + 1 > ctx.order())
      throw InvalidArgument("at most q-1 distinct nonzero t_i exist");
    std::set<std::uint32_t> seen;
    for (FieldElement x : t) {
      if (x.is_zero() || x.index() >= ctx.order())
        throw InvalidArgument("t_i must be nonzero field elements");
      if (!seen.insert(x.index()).second) throw InvalidArgument("t_i must be distinct");
    }
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (mu0[i] < 0 || mu1[i] < 0) throw InvalidArgument("negative exponent in mu");
      if (mu0[i] > 0 && pair.m0.exponents[i] == 0)
        throw InvalidArgument("mu0 may only involve variables of M0");
      if (mu1[i] > 0 && pair.m1.exponents[i] == 0)
        throw InvalidArgument("mu1 may only involve variables of M1");
    }
    if (t.empty() && (sigma0() != pair.s0 || sigma1() != pair.s1))
      throw InvalidArgument("with no factors, mu0 and mu1 must involve every variable of M0, M1");
  }

 private:
  static int count_support(const Exponents& e) {
    return static_cast<int>(std::count_if(e.begin(), e.end(), [](int r) { return r > 0; }));
  }
};

inline WeightedPolynomial build_family(const FieldCtx& ctx, const WeightSystem& ws,
                                       const FamilySpec& spec) {
  spec.validate(ws, ctx);
  WeightedPolynomial f = multiply(ctx, WeightedPolynomial::monomial(ws, spec.mu0, ctx.one()),
                                  WeightedPolynomial::monomial(ws, spec.mu1, ctx.one()));
  for (FieldElement ti : spec.t) {
    WeightedPolynomial factor(ws, spec.pair.m0.wdeg);
    factor.add_term(ctx, spec.pair.m0.exponents, ctx.one());
    factor.add_term(ctx, spec.pair.m1.exponents, ctx.neg(ti));
    f = multiply(ctx, f, factor);
  }
  return f;
}

/// lambda * q^{m+1-s0-s1} + p_{m-s0-s1}.
inline std::uint64_t family_count_closed_form(int ell, int s0, int s1, int sigma0, int sigma1,
                                              std::uint64_t q, int m) {
  if (s0 < 1 || s1 < 1 || sigma0 < 0 || sigma1 < 0 || sigma0 > s0 || sigma1 > s1 ||
      s0 + s1 > m + 1 || ell < 0)
    throw InvalidArgument("invalid family signature");
  __extension__ using I = __int128;
  auto pw = [](I b, int e) {
    I r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  const I Q = static_cast<I>(q), Q1 = Q - 1;
  const I lambda = I(ell) * pw(Q1, s0 + s1 - 2) +
                   ((pw(Q, s0) - pw(Q1, s0)) * (pw(Q, s1) - pw(Q1, s1)) - 1) / Q1 +
                   pw(Q1, s1 - 1) * pw(Q, s0 - sigma0) * (pw(Q, sigma0) - pw(Q1, sigma0)) +
                   pw(Q1, s0 - 1) * pw(Q, s1 - sigma1) * (pw(Q, sigma1) - pw(Q1, sigma1));
  return static_cast<std::uint64_t>(lambda * pw(Q, m + 1 - s0 - s1)) +
         projective_count(q, m - s0 - s1);
}

inline std::uint64_t family_count_closed_form(const FamilySpec& spec, std::uint64_t q, int m) {
  return family_count_closed_form(spec.ell(), spec.pair.s0, spec.pair.s1, spec.sigma0(),
                                  spec.sigma1(), q, m);
}

/// Solutions in (F_q^*)^{s0+s1} of alpha x^a = beta y^b, by histograms of
/// discrete logarithms.
inline std::uint64_t torus_count(const FieldCtx& ctx, std::span<const int> a,
                                 std::span<const int> b, FieldElement alpha, FieldElement beta) {
  if (alpha.is_zero() || beta.is_zero()) throw InvalidArgument("alpha and beta must be nonzero");
  if (a.empty() || b.empty()) throw InvalidArgument("both sides need at least one variable");
  const std::uint64_t n = ctx.order() - 1;
  auto histogram = [&](std::span<const int> exps) {
    std::vector<std::uint64_t> h(n, 0);
    h[0] = 1;
    for (int e : exps) {
      if (e < 1) throw InvalidArgument("exponents must be positive");
      std::vector<std::uint64_t> next(n, 0);
      for (std::uint64_t r = 0; r < n; ++r)
        if (h[r])
          for (std::uint64_t t = 0; t < n; ++t)
            next[(r + static_cast<std::uint64_t>(e) * t) % n] += h[r];
      h = std::move(next);
    }
    return h;
  };
  const auto h0 = histogram(a), h1 = histogram(b);
  const std::uint64_t shift = (ctx.log(alpha) + n - ctx.log(beta)) % n;
  std::uint64_t total = 0;
  for (std::uint64_t r = 0; r < n; ++r) total += h0[r] * h1[(r + shift) % n];
  return total;
}

/// Pair (r, s) minimizing lcm(a_r, a_s), first in index order.
struct SerrePair {
  std::size_t r = 0, s = 0;
  long a = 0;
};

inline std::optional<SerrePair> serre_pair(const WeightSystem& ws) {
  std::optional<SerrePair> best;
  for (std::size_t r = 0; r < ws.size(); ++r)
    for (std::size_t s = r + 1; s < ws.size(); ++s) {
      const long l = std::lcm(static_cast<long>(ws[r]), static_cast<long>(ws[s]));
      if (!best || l < best->a) best = SerrePair{r, s, l};
    }
  return best;
}

/// min{p_m, (d/a) q^{m-1} + p_{m-2}} with a the smallest pairwise lcm; empty
/// when m = 0 or a does not divide d.
inline std::optional<std::uint64_t> serre_lower_bound(const WeightSystem& ws, long d,
                                                      std::uint64_t q) {
  const auto pair = serre_pair(ws);
  if (!pair || d < 0 || d % pair->a != 0) return std::nullopt;
  const int m = ws.dim();
  const long double v = static_cast<long double>(d / pair->a) * ipow_ld(q, m - 1) +
                        static_cast<long double>(projective_count(q, m - 2));
  const std::uint64_t pm = projective_count(q, m);
  return v >= static_cast<long double>(pm) ? pm : static_cast<std::uint64_t>(v);
}

/// prod_i (alpha_i X_r^{a/a_r} - beta_i X_s^{a/a_s}) over d/a points of P^1(F_q).
/// Point j < q is (1 : j) and j = q is (0 : 1); `choice` lists distinct points
/// to use, defaulting to 0, 1, 2, .... When d/a exceeds q + 1 every point is
/// used and the first factor is repeated.
inline std::optional<WeightedPolynomial> serre_witness(const FieldCtx& ctx,
                                                       const WeightSystem& ws, long d,
                                                       std::vector<std::uint32_t> choice = {}) {
  const auto pair = serre_pair(ws);
  if (!pair || d < 0 || d % pair->a != 0) return std::nullopt;
  const std::uint32_t q = ctx.order();
  const long factors = d / pair->a;
  const long distinct = std::min<long>(factors, q + 1);
  if (choice.empty())
    for (long j = 0; j < distinct; ++j) choice.push_back(static_cast<std::uint32_t>(j));
  if (static_cast<long>(choice.size()) < distinct)
    throw InvalidArgument("need " + std::to_string(distinct) + " points of P^1");
  std::set<std::uint32_t> seen;
  for (std::uint32_t j : choice)
    if (j > q || !seen.insert(j).second)
      throw InvalidArgument("P^1 point choices must be distinct indices in [0, q]");
  Exponents er(ws.size(), 0), es(ws.size(), 0);
  er[pair->r] = static_cast<int>(pair->a / ws[pair->r]);
  es[pair->s] = static_cast<int>(pair->a / ws[pair->s]);
  WeightedPolynomial f = constant(ctx, ws);
  for (long i = 0; i < factors; ++i) {
    const std::uint32_t j = choice[static_cast<std::size_t>(i < distinct ? i : 0)];
    const FieldElement alpha = j == q ? ctx.zero() : ctx.one();
    const FieldElement beta = j == q ? ctx.one() : ctx.element(j);
    WeightedPolynomial factor(ws, pair->a);
    factor.add_term(ctx, er, alpha);
    factor.add_term(ctx, es, ctx.neg(beta));
    f = multiply(ctx, f, factor);
  }
  return f;
}

enum class Sharpness { Yes, No, Unknown };

inline const char* to_string(Sharpness s) {
  switch (s) {
    case Sharpness::Yes: return "yes";
    case Sharpness::No: return "no";
    default: return "unknown";
  }
}

struct BoundReport {
  std::string name;
  std::uint64_t value = 0;
  std::uint64_t bound = 0;
  bool satisfied = true;
  // Whether some polynomial of the same degree attains the bound.
  Sharpness sharp = Sharpness::Unknown;
  bool attained = false;  // value == bound
};

/// Every applicable upper bound for |V(F)| (or its affine part).
inline std::vector<BoundReport> check_bounds(const FieldCtx& ctx, const WeightedPolynomial& f,
                                             const PointSet& pts,
                                             std::uint64_t sharp_budget = kDefaultSharpnessBudget) {
  if (f.is_zero()) throw InvalidArgument("bounds need a nonzero polynomial");
  check_same_space(f, pts);
  const WeightSystem& ws = f.weights();
  const long d = f.degree();
  const std::uint64_t q = ctx.order();
  const int m = ws.dim();
  std::vector<BoundReport> out;
  std::optional<std::uint64_t> eq;
  bool eq_tried = false;
  auto sharpness = [&](std::uint64_t bound) {
    if (!eq_tried) {
      eq_tried = true;
      const auto k = dim_Sd(ws, d);
      if (projective_candidates(ctx.order(), k) <= static_cast<long double>(sharp_budget))
        eq = eq_oracle(ctx, pts, d, sharp_budget).value;
    }
    if (!eq) return Sharpness::Unknown;
    return *eq == bound ? Sharpness::Yes : Sharpness::No;
  };
  auto push = [&](std::string name, std::uint64_t value, std::uint64_t bound, Sharpness s) {
    out.push_back({std::move(name), value, bound, value <= bound, s, value == bound});
  };
  const std::uint64_t total = count_zeros(ctx, f, pts);

  if (ws.is_classical() && m >= 1) {
    const std::uint64_t bound = static_cast<std::uint64_t>(d) * ipow(q, m - 1) +
                                projective_count(q, m - 2);
    push("serre", total, bound, sharpness(bound));
  }
  if (m == 2 && ws[0] == 1) {
    const long a1 = std::min(ws[1], ws[2]);
    if (d % ws.lcm() == 0) {
      if (d <= a1 * static_cast<long>(q + 1)) {
        const std::uint64_t bound = static_cast<std::uint64_t>(d / a1) * q + 1;
        push("plane", total, bound, sharpness(bound));
      }
      push("weighted-ore", count_affine_zeros(ctx, f, pts),
           static_cast<std::uint64_t>(d / a1) * q, Sharpness::Unknown);
    }
  }
  if (m == 1 && ws[0] == 1 && d % ws[1] == 0) {
    const std::uint64_t bound = static_cast<std::uint64_t>(d / ws[1]);
    push("weighted-dalembert", total, bound, sharpness(bound));
  }
  return out;
}

}  // namespace wps
