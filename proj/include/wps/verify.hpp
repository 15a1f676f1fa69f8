#pragma once

// Oracle-versus-formula suites shared by the CLI `verify` command and the
// acceptance runner. Each suite counts checks and records counterexamples.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "wps/delorme.hpp"
#include "wps/plane_lines.hpp"
#include "wps/weighted_space.hpp"
#include "wps/wprm_codes.hpp"
#include "wps/zero_sets.hpp"

namespace wps {

struct VerifyOptions {
  std::vector<std::uint32_t> qs;  // empty: suite default
  int max_weight = 0;             // 0: suite default
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultCandidateBudget;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t checks = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few counterexamples

  SuiteReport() = default;
  SuiteReport(std::string name, std::uint64_t s) : suite(std::move(name)), seed(s) {}

  bool passed() const { return failed == 0 && checks > 0; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < 20) failures.push_back(describe());
  }
};

namespace detail {

inline std::vector<std::uint32_t> or_default(const std::vector<std::uint32_t>& qs,
                                             std::vector<std::uint32_t> fallback) {
  return qs.empty() ? fallback : qs;
}

/// Every jointly coprime weight tuple of the given length with entries <= w.
inline std::vector<WeightSystem> weight_grid(std::size_t length, int w) {
  std::vector<WeightSystem> out;
  std::vector<int> a(length, 1);
  while (true) {
    if (gcd_of(a) == 1) out.emplace_back(a);
    std::size_t i = length;
    while (i > 0 && a[i - 1] == w) a[--i] = 1;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

inline std::string describe(const WeightSystem& ws, std::uint32_t q, long d = -1) {
  std::string s = "P(" + ws.to_string() + ") over F_" + std::to_string(q);
  if (d >= 0) s += ", d = " + std::to_string(d);
  return s;
}

/// Uniform random nonzero element of S_d (empty when S_d = 0).
inline std::optional<WeightedPolynomial> random_polynomial(const FieldCtx& ctx,
                                                           const WeightSystem& ws, long d,
                                                           std::mt19937_64& rng) {
  const auto basis = monomial_basis(ws, d);
  if (basis.empty()) return std::nullopt;
  std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.order() - 1);
  while (true) {
    WeightedPolynomial f(ws, d);
    for (const auto& mono : basis) f.set_term(mono.exponents, ctx.element(coeff(rng)));
    if (!f.is_zero()) return f;
  }
}

/// Product of random factors whose degrees are weights of ws summing to d,
/// so that zero-rich polynomials are well represented. Falls back to a dense
/// random polynomial when the split fails.
inline std::optional<WeightedPolynomial> random_product(const FieldCtx& ctx,
                                                        const WeightSystem& ws, long d,
                                                        std::mt19937_64& rng) {
  std::vector<long> degrees;
  long left = d;
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  for (int tries = 0; left > 0 && tries < 64; ++tries) {
    const long w = ws[pick(rng)];
    if (w <= left) degrees.push_back(w), left -= w;
  }
  if (left != 0) return random_polynomial(ctx, ws, d, rng);
  WeightedPolynomial f = constant(ctx, ws);
  for (long e : degrees) {
    auto g = random_polynomial(ctx, ws, e, rng);
    if (!g) return random_polynomial(ctx, ws, d, rng);
    f = multiply(ctx, f, *g);
  }
  if (f.is_zero()) return random_polynomial(ctx, ws, d, rng);
  return f;
}

}  // namespace detail

/// |P(a)(F_q)| = p_m over all weight tuples with entries <= max_weight, m <= 3,
/// skipping tuples where the characteristic divides a weight.
inline SuiteReport verify_points(const VerifyOptions& opt) {
  SuiteReport rep{"points", opt.seed};
  const auto qs = detail::or_default(opt.qs, {2, 3, 4, 5, 7, 8, 9});
  const int w = opt.max_weight ? opt.max_weight : 6;
  for (std::uint32_t q : qs) {
    const FieldCtx ctx = parse_field(std::to_string(q));
    for (std::size_t len = 1; len <= 4; ++len)
      for (const auto& ws : detail::weight_grid(len, w)) {
        if (ws.char_divides_weight(ctx.characteristic())) {
          ++rep.skipped;
          continue;
        }
        const auto pts = enumerate_points(ws, ctx, opt.budget);
        const auto expected = projective_count(q, ws.dim());
        rep.check(pts.size() == expected, [&] {
          return detail::describe(ws, q) + ": " + std::to_string(pts.size()) + " points, expected " +
                 std::to_string(expected);
        });
      }
  }
  return rep;
}

struct GeneratedFamily {
  WeightSystem ws;
  FamilySpec spec;
};

/// Random valid family on a random weight system of dimension m.
inline GeneratedFamily random_family(const FieldCtx& ctx, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(1, 4), expo(1, 3);
  const std::size_t len = static_cast<std::size_t>(m + 1);
  while (true) {
    std::vector<std::size_t> perm(len);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const int s0 = std::uniform_int_distribution<int>(1, m)(rng);
    const int s1 = std::uniform_int_distribution<int>(1, m + 1 - s0)(rng);
    std::vector<int> a(len);
    for (auto& x : a) x = weight(rng);
    if (gcd_of(a) != 1) continue;
    const WeightSystem ws(a);
    Exponents e0(len, 0), e1(len, 0);
    for (int i = 0; i < s0; ++i) e0[perm[static_cast<std::size_t>(i)]] = expo(rng);
    for (int i = 0; i < s1; ++i) e1[perm[static_cast<std::size_t>(s0 + i)]] = expo(rng);
    if (weighted_degree(ws, e0) != weighted_degree(ws, e1)) continue;
    std::vector<int> all;
    for (std::size_t i = 0; i < len; ++i) {
      if (e0[i]) all.push_back(e0[i]);
      if (e1[i]) all.push_back(e1[i]);
    }
    if (gcd_of(all) != 1) continue;
    FamilySpec spec{PrimitivePair::make(ws, e0, e1), {}, Exponents(len, 0), Exponents(len, 0)};
    const int ell = std::uniform_int_distribution<int>(0, static_cast<int>(ctx.order()) - 1)(rng);
    std::vector<std::uint32_t> nonzero(ctx.order() - 1);
    std::iota(nonzero.begin(), nonzero.end(), 1u);
    std::shuffle(nonzero.begin(), nonzero.end(), rng);
    for (int i = 0; i < ell; ++i) spec.t.push_back(ctx.element(nonzero[static_cast<std::size_t>(i)]));
    auto pick_mu = [&](const Exponents& e, int s, Exponents& mu) {
      const int sigma = ell == 0 ? s : std::uniform_int_distribution<int>(0, s)(rng);
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < len; ++i)
        if (e[i]) support.push_back(i);
      std::shuffle(support.begin(), support.end(), rng);
      for (int i = 0; i < sigma; ++i)
        mu[support[static_cast<std::size_t>(i)]] = std::uniform_int_distribution<int>(1, 2)(rng);
    };
    pick_mu(e0, s0, spec.mu0);
    pick_mu(e1, s1, spec.mu1);
    return {ws, std::move(spec)};
  }
}

/// Closed-form family counts against brute-force zero counts.
inline SuiteReport verify_families(const VerifyOptions& opt, std::uint64_t per_cell = 30) {
  SuiteReport rep{"families", opt.seed};
  const auto qs = detail::or_default(opt.qs, {3, 4, 5, 7});
  std::mt19937_64 rng(opt.seed);
  auto run = [&](const FieldCtx& ctx, const WeightSystem& ws, const FamilySpec& spec) {
    const auto pts = enumerate_points(ws, ctx, opt.budget);
    const auto f = build_family(ctx, ws, spec);
    const auto brute = count_zeros(ctx, f, pts);
    const auto closed = family_count_closed_form(spec, ctx.order(), ws.dim());
    rep.check(brute == closed, [&] {
      return detail::describe(ws, ctx.order(), f.degree()) + ": F = " + to_string(f) +
             " has " + std::to_string(brute) + " zeros, closed form " + std::to_string(closed);
    });
  };
  for (std::uint32_t q : qs) {
    const FieldCtx ctx = parse_field(std::to_string(q));
    for (int m : {2, 3})
      for (std::uint64_t i = 0; i < per_cell; ++i) {
        const auto g = random_family(ctx, m, rng);
        run(ctx, g.ws, g.spec);
      }
  }
  // The two P(2,3,5) families at q = 5.
  const FieldCtx f5 = make_field(5, 1);
  const WeightSystem w235({2, 3, 5});
  std::vector<FieldElement> t;
  for (std::uint32_t i = 1; i <= 4; ++i) t.push_back(f5.element(i));
  FamilySpec a{PrimitivePair::make(w235, {1, 1, 0}, {0, 0, 1}), t, {1, 1, 0}, {0, 0, 1}};
  FamilySpec b{PrimitivePair::make(w235, {3, 0, 0}, {0, 2, 0}), {t.begin(), t.begin() + 3},
               {3, 0, 0}, {0, 2, 0}};
  run(f5, w235, a);
  run(f5, w235, b);
  const auto pts = enumerate_points(w235, f5);
  rep.check(count_zeros(f5, build_family(f5, w235, a), pts) == 7 * 5 - 4,
            [] { return std::string("P(2,3,5), q = 5: first family should have 7q-4 zeros"); });
  rep.check(count_zeros(f5, build_family(f5, w235, b), pts) == 5 * 5 + 1,
            [] { return std::string("P(2,3,5), q = 5: second family should have 5q+1 zeros"); });
  return rep;
}

/// Torus solution counts (q-1)^{s0+s1-1} for every exponent tuple with
/// s0 + s1 <= 4, entries <= max_weight, gcd 1, and every alpha, beta.
inline SuiteReport verify_torus(const VerifyOptions& opt) {
  SuiteReport rep{"torus", opt.seed};
  const auto qs = detail::or_default(opt.qs, {2, 3, 4, 5, 7});
  const int w = opt.max_weight ? opt.max_weight : 5;
  for (std::uint32_t q : qs) {
    const FieldCtx ctx = parse_field(std::to_string(q));
    for (std::size_t total = 2; total <= 4; ++total) {
      std::vector<int> e(total, 1);
      while (true) {
        if (gcd_of(e) == 1)
          for (std::size_t s0 = 1; s0 < total; ++s0) {
            const std::span<const int> a(e.data(), s0), b(e.data() + s0, total - s0);
            const auto expected = ipow(q - 1, static_cast<unsigned>(total - 1));
            for (std::uint32_t x = 1; x < q; ++x)
              for (std::uint32_t y = 1; y < q; ++y) {
                const auto got = torus_count(ctx, a, b, ctx.element(x), ctx.element(y));
                rep.check(got == expected, [&] {
                  std::ostringstream s;
                  s << "q = " << q << ", exponents (";
                  for (std::size_t i = 0; i < total; ++i) s << (i ? (i == s0 ? " | " : ",") : "") << e[i];
                  s << "), alpha = " << x << ", beta = " << y << ": " << got << " solutions";
                  return s.str();
                });
              }
          }
        std::size_t i = total;
        while (i > 0 && e[i - 1] == w) e[--i] = 1;
        if (i == 0) break;
        ++e[i - 1];
      }
    }
  }
  return rep;
}

/// e_q by exhaustive search against min{p_m, d q^{m-1} + p_{m-2}} on classical
/// spaces and (d/a1) q + 1 on (1, a1, a2).
inline SuiteReport verify_extremal(const VerifyOptions& opt) {
  SuiteReport rep{"extremal", opt.seed};
  const auto qs = detail::or_default(opt.qs, {2, 3});
  const int w = opt.max_weight ? opt.max_weight : 4;
  for (std::uint32_t q : qs) {
    const FieldCtx ctx = parse_field(std::to_string(q));
    for (int m = 1; m <= 2; ++m) {
      const WeightSystem ws = WeightSystem::classical(m);
      const auto pts = enumerate_points(ws, ctx);
      for (long d = 1; d <= static_cast<long>(q) + 1; ++d) {
        const auto got = eq_oracle(ctx, pts, d, opt.budget).value;
        const auto expected = std::min<std::uint64_t>(
            projective_count(q, m),
            static_cast<std::uint64_t>(d) * ipow(q, m - 1) + projective_count(q, m - 2));
        rep.check(got == expected, [&] {
          return detail::describe(ws, q, d) + ": e_q = " + std::to_string(got) + ", expected " +
                 std::to_string(expected);
        });
      }
    }
    for (int a1 = 1; a1 <= w; ++a1)
      for (int a2 = a1 + 1; a2 <= w; ++a2) {
        if (std::gcd(a1, a2) != 1) continue;
        const WeightSystem ws({1, a1, a2});
        const auto pts = enumerate_points(ws, ctx);
        for (long d = a1 * a2; d <= a1 * static_cast<long>(q + 1); d += a1 * a2) {
          const auto got = eq_oracle(ctx, pts, d, opt.budget).value;
          const auto expected = static_cast<std::uint64_t>(d / a1) * q + 1;
          rep.check(got == expected, [&] {
            return detail::describe(ws, q, d) + ": e_q = " + std::to_string(got) +
                   ", expected " + std::to_string(expected);
          });
        }
      }
  }
  return rep;
}

/// Exhaustive WPRM minimum distance against (q - d/a1 + 1) q on (1, a1, a2).
inline SuiteReport verify_codes(const VerifyOptions& opt) {
  SuiteReport rep{"codes", opt.seed};
  const auto qs = detail::or_default(opt.qs, {2, 3});
  const int w = opt.max_weight ? opt.max_weight : 3;
  for (std::uint32_t q : qs) {
    const FieldCtx ctx = parse_field(std::to_string(q));
    for (int a1 = 1; a1 <= w; ++a1)
      for (int a2 = a1 + 1; a2 <= w; ++a2) {
        if (std::gcd(a1, a2) != 1) continue;
        const WeightSystem ws({1, a1, a2});
        const long l = ws.lcm();
        for (long d = l; d / a1 <= static_cast<long>(q); d += l) {
          const auto code = build_code(ctx, CodeKind::WPRM, 2, d, ws);
          const auto ex = min_distance_exhaustive(ctx, code, opt.budget);
          const auto expected = (q - static_cast<std::uint64_t>(d / a1) + 1) * q;
          const auto formula = dmin_formula(code);
          rep.check(ex == expected && formula && formula->d_min == expected, [&] {
            return detail::describe(ws, q, d) + ": exhaustive d_min = " + std::to_string(ex) +
                   ", formula " + std::to_string(expected);
          });
          const auto wit = dmin_witness(ctx, code);
          const auto ww = wit ? weight(encode(ctx, code, *wit)) : 0;
          rep.check(ww == expected, [&] {
            return detail::describe(ws, q, d) + ": witness codeword weight " + std::to_string(ww);
          });
        }
      }
  }
  return rep;
}

/// Delorme pairs: the point map is a bijection, e_q agrees, zero sets
/// correspond, and WPRM (k, d_min) agree. Target degrees run over
/// 1..2 lcm; those whose search exceeds per_check_budget count as skipped.
inline SuiteReport verify_delorme(const VerifyOptions& opt, std::uint64_t per_check_budget = 2'000'000) {
  SuiteReport rep{"delorme", opt.seed};
  const auto qs = detail::or_default(opt.qs, {2, 3});
  const int w = opt.max_weight ? opt.max_weight : 4;
  for (std::uint32_t q : qs) {
    const FieldCtx ctx = parse_field(std::to_string(q));
    for (std::size_t len = 2; len <= 3; ++len)
      for (const auto& target : detail::weight_grid(len, w))
        for (int b = 2; b <= 3; ++b)
          for (std::size_t i = 0; i < len; ++i) {
            if (std::gcd(b, target[i]) != 1) continue;
            std::vector<int> src = target.weights();
            for (std::size_t j = 0; j < len; ++j)
              if (j != i) src[j] *= b;
            const WeightSystem source(src);
            const auto step = delorme_reduce(source, i, b);
            const std::string tag = "(" + source.to_string() + ") -> (" + target.to_string() +
                                    "), q = " + std::to_string(q);
            rep.check(step.target == target, [&] { return tag + ": wrong target weights"; });
            const auto sp = enumerate_points(source, ctx), tp = enumerate_points(target, ctx);
            std::vector<WeightedPoint> images;
            for (const auto& pt : sp) images.push_back(step.map_point(ctx, pt));
            std::sort(images.begin(), images.end());
            rep.check(images == tp.points(), [&] { return tag + ": point map is not a bijection"; });

            for (long dt = 1; dt <= 2 * target.lcm(); ++dt) {
              const auto k = dim_Sd(target, dt);
              if (k == 0) continue;
              if (projective_candidates(q, k) > static_cast<long double>(per_check_budget)) {
                ++rep.skipped;
                continue;
              }
              const long ds = dt * b;
              rep.check(dim_Sd(source, ds) == k, [&] {
                return tag + ", d = " + std::to_string(ds) + ": dimensions differ";
              });
              const auto es = eq_oracle(ctx, sp, ds, opt.budget);
              const auto et = eq_oracle(ctx, tp, dt, opt.budget);
              rep.check(es.value == et.value, [&] {
                return tag + ", d = " + std::to_string(ds) + ": e_q " + std::to_string(es.value) +
                       " vs " + std::to_string(et.value);
              });
              const auto mapped = step.map_polynomial(*es.witness);
              rep.check(count_zeros(ctx, mapped, tp) == es.value &&
                            step.lift_polynomial(mapped) == *es.witness,
                        [&] { return tag + ", d = " + std::to_string(ds) + ": zero sets differ"; });
              if (dt % target.lcm() == 0) {
                const auto cs = build_code(ctx, CodeKind::WPRM, source.dim(), ds, source);
                const auto ct = build_code(ctx, CodeKind::WPRM, target.dim(), dt, target);
                const auto ps = code_parameters(ctx, cs, DminMethod::Exhaustive, opt.budget);
                const auto pt = code_parameters(ctx, ct, DminMethod::Exhaustive, opt.budget);
                rep.check(ps.k == pt.k && ps.d_min == pt.d_min, [&] {
                  return tag + ", d = " + std::to_string(ds) + ": codes [" + std::to_string(ps.k) +
                         "," + std::to_string(ps.d_min) + "] vs [" + std::to_string(pt.k) + "," +
                         std::to_string(pt.d_min) + "]";
                });
              }
            }
          }
  }
  return rep;
}

struct BoundTally {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
};

/// Randomized bound checks; each named bound is exercised on opt.samples
/// polynomials. Sharpness is not computed here.
inline SuiteReport verify_bounds(const VerifyOptions& opt,
                                 std::map<std::string, BoundTally>* tally = nullptr) {
  SuiteReport rep{"bounds", opt.seed};
  std::mt19937_64 rng(opt.seed);
  const auto qs = detail::or_default(opt.qs, {2, 3, 4, 5});
  std::map<std::string, BoundTally> local;
  auto& t = tally ? *tally : local;
  std::map<std::pair<std::string, std::uint32_t>, PointSet> cache;
  std::map<std::uint32_t, FieldCtx> fields;
  auto field = [&](std::uint32_t q) -> const FieldCtx& {
    auto it = fields.find(q);
    if (it == fields.end()) it = fields.emplace(q, parse_field(std::to_string(q))).first;
    return it->second;
  };
  auto points = [&](const WeightSystem& ws, const FieldCtx& ctx) -> const PointSet& {
    const auto key = std::make_pair(ws.to_string(), ctx.order());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_points(ws, ctx)).first;
    return it->second;
  };
  auto pick_q = [&] { return qs[std::uniform_int_distribution<std::size_t>(0, qs.size() - 1)(rng)]; };
  auto random_f = [&](const FieldCtx& ctx, const WeightSystem& ws, long d) {
    return std::bernoulli_distribution(0.5)(rng) ? detail::random_product(ctx, ws, d, rng)
                                                 : detail::random_polynomial(ctx, ws, d, rng);
  };
  auto record = [&](const BoundReport& b, const std::string& where) {
    auto& c = t[b.name];
    ++c.samples;
    if (!b.satisfied) ++c.violations;
    rep.check(b.satisfied, [&] {
      return where + ": " + b.name + " bound " + std::to_string(b.bound) + " exceeded by " +
             std::to_string(b.value);
    });
  };
  auto run = [&](const std::string& want, auto&& draw) {
    while (t[want].samples < opt.samples) {
      auto [ws, d, q] = draw();
      const FieldCtx& ctx = field(q);
      auto f = random_f(ctx, ws, d);
      if (!f) continue;
      const auto& pts = points(ws, ctx);
      for (const auto& b : check_bounds(ctx, *f, pts, 0))
        if (b.name == want) record(b, detail::describe(ws, q, d) + ", F = " + to_string(*f));
    }
  };
  std::uniform_int_distribution<int> small(1, 4);
  run("serre", [&] {
    const std::uint32_t q = pick_q();
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    const long d = std::uniform_int_distribution<long>(1, q + 2)(rng);
    return std::tuple{WeightSystem::classical(m), d, q};
  });
  auto plane_draw = [&] {
    while (true) {
      const std::uint32_t q = pick_q();
      int a1 = small(rng), a2 = small(rng);
      if (a1 > a2) std::swap(a1, a2);
      const WeightSystem ws({1, a1, a2});
      const long l = ws.lcm();
      const long max_mult = a1 * static_cast<long>(q + 1) / l;
      if (max_mult < 1) continue;
      const long d = l * std::uniform_int_distribution<long>(1, max_mult)(rng);
      return std::tuple{ws, d, q};
    }
  };
  run("plane", plane_draw);
  run("weighted-ore", plane_draw);
  run("weighted-dalembert", [&] {
    const std::uint32_t q = pick_q();
    const int a1 = std::uniform_int_distribution<int>(1, 6)(rng);
    const long d = a1 * std::uniform_int_distribution<long>(1, q + 2)(rng);
    return std::tuple{WeightSystem({1, a1}), d, q};
  });

  // Extremal product of P^1 factors: exactly the lower-bound count, and no
  // more than the exhaustive maximum where that is affordable.
  auto& lb = t["lower-bound-witness"];
  while (lb.samples < opt.samples) {
    const std::uint32_t q = pick_q();
    const FieldCtx& ctx = field(q);
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> a(static_cast<std::size_t>(m + 1));
    for (auto& x : a) x = small(rng);
    if (gcd_of(a) != 1) continue;
    const WeightSystem ws(a);
    if (ipow(q, static_cast<unsigned>(m + 1)) > 20'000) continue;
    const auto pair = serre_pair(ws);
    const long d = pair->a * std::uniform_int_distribution<long>(1, q + 2)(rng);
    const long factors = std::min<long>(d / pair->a, q + 1);
    std::vector<std::uint32_t> choice(q + 1);
    std::iota(choice.begin(), choice.end(), 0u);
    std::shuffle(choice.begin(), choice.end(), rng);
    choice.resize(static_cast<std::size_t>(factors));
    const auto f = serre_witness(ctx, ws, d, choice);
    const auto bound = *serre_lower_bound(ws, d, q);
    const auto& pts = points(ws, ctx);
    const auto got = count_zeros(ctx, *f, pts);
    ++lb.samples;
    if (got != bound) ++lb.violations;
    rep.check(got == bound, [&] {
      return detail::describe(ws, q, d) + ": witness has " + std::to_string(got) +
             " zeros, lower bound " + std::to_string(bound);
    });
    const auto k = dim_Sd(ws, d);
    if (lb.samples % 50 == 0 && projective_candidates(q, k) <= 20'000) {
      const auto e = eq_oracle(ctx, pts, d).value;
      rep.check(e >= bound, [&] {
        return detail::describe(ws, q, d) + ": e_q = " + std::to_string(e) +
               " below the lower bound " + std::to_string(bound);
      });
    }
  }
  return rep;
}

/// Incidence properties of the line catalog of one plane P(1, a1, a2).
inline void check_line_incidences(const WeightSystem& ws, const FieldCtx& ctx,
                                  std::mt19937_64& rng, SuiteReport& rep) {
  const std::uint32_t q = ctx.order();
  const LineSystem sys(ws, ctx);
  const auto& pts = sys.points();
  const auto lines = sys.catalog();
  const std::string tag = detail::describe(ws, q);
  rep.check(lines.size() == 1 + q + static_cast<std::size_t>(q) * q,
            [&] { return tag + ": catalog size " + std::to_string(lines.size()); });
  std::vector<std::vector<bool>> on(lines.size(), std::vector<bool>(pts.size(), false));
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto lp = sys.line_points(lines[l]);
    rep.check(lp.size() == q + 1, [&] {
      return tag + ": " + lines[l].to_string() + " has " + std::to_string(lp.size()) + " points";
    });
    for (const auto& p : lp) on[l][static_cast<std::size_t>(pts.find(p))] = true;
  }
  for (std::size_t l1 = 0; l1 < lines.size(); ++l1)
    for (std::size_t l2 = l1 + 1; l2 < lines.size(); ++l2) {
      bool meet = false;
      for (std::size_t p = 0; p < pts.size() && !meet; ++p) meet = on[l1][p] && on[l2][p];
      rep.check(meet, [&] {
        return tag + ": " + lines[l1].to_string() + " and " + lines[l2].to_string() +
               " are disjoint";
      });
    }
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (pts[p].chart != 0) continue;
    std::size_t t1 = 0, t2 = 0;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (!on[l][p]) continue;
      if (lines[l].kind == LineKind::Type1) ++t1;
      if (lines[l].kind == LineKind::Type2) ++t2;
    }
    rep.check(t1 == 1 && t2 == q, [&] {
      return tag + ": affine point " + pts[p].to_string() + " on " + std::to_string(t1) +
             " type-1 and " + std::to_string(t2) + " type-2 lines";
    });
  }
  std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
  for (int trial = 0; trial < 8; ++trial) {
    const auto& l = lines[pick(rng)];
    const auto sub = sys.normalize_line(l);
    const auto image = sub.apply(ctx, sys.line_form(l));
    Exponents unit(3, 0);
    unit[sub.var] = 1;
    rep.check(image == WeightedPolynomial::monomial(ws, unit, ctx.one()), [&] {
      return tag + ": " + l.to_string() + " does not normalize to a coordinate line";
    });
    const long d = ws.lcm() * std::uniform_int_distribution<long>(1, 2)(rng);
    const auto f = detail::random_product(ctx, ws, d, rng);
    if (!f) continue;
    const auto g = sub.apply(ctx, *f);
    rep.check(g.degree() == f->degree() && count_zeros(ctx, g, pts) == count_zeros(ctx, *f, pts) &&
                  sub.undo(ctx, g) == *f,
              [&] { return tag + ": substitution for " + l.to_string() + " changes F = " + to_string(*f); });
  }
}

/// Incidence properties over all coprime a1 < a2 <= max_weight.
inline SuiteReport verify_lines(const VerifyOptions& opt) {
  SuiteReport rep{"lines", opt.seed};
  const auto qs = detail::or_default(opt.qs, {2, 3, 4, 5, 7});
  const int w = opt.max_weight ? opt.max_weight : 4;
  std::mt19937_64 rng(opt.seed);
  for (std::uint32_t q : qs) {
    const FieldCtx ctx = parse_field(std::to_string(q));
    for (int a1 = 1; a1 <= w; ++a1)
      for (int a2 = a1 + 1; a2 <= w; ++a2)
        if (std::gcd(a1, a2) == 1) check_line_incidences(WeightSystem({1, a1, a2}), ctx, rng, rep);
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"points", "families", "torus",  "extremal",
                                              "codes",  "delorme",  "bounds", "lines"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "points") return verify_points(opt);
  if (name == "families") return verify_families(opt);
  if (name == "torus") return verify_torus(opt);
  if (name == "extremal") return verify_extremal(opt);
  if (name == "codes") return verify_codes(opt);
  if (name == "delorme") return verify_delorme(opt);
  if (name == "bounds") return verify_bounds(opt);
  if (name == "lines") return verify_lines(opt);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace wps
