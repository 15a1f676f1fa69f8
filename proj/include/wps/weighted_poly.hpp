#pragma once

// Weighted homogeneous polynomials over F_q.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wps/errors.hpp"
#include "wps/finite_field.hpp"
#include "wps/weights.hpp"

namespace wps {

using Exponents = std::vector<int>;

inline long weighted_degree(const WeightSystem& ws, std::span<const int> exps) {
  long d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<long>(ws[i]) * exps[i];
  return d;
}

struct Monomial {
  Exponents exponents;
  long wdeg = 0;

  Monomial() = default;
  Monomial(const WeightSystem& ws, Exponents exps)
      : exponents(std::move(exps)), wdeg(weighted_degree(ws, exponents)) {
    if (exponents.size() != ws.size())
      throw InvalidArgument("monomial arity does not match the weight system");
    for (int r : exponents)
      if (r < 0) throw InvalidArgument("negative exponent");
  }

  bool is_constant() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int r) { return r == 0; });
  }
  /// Number of distinct variables.
  int support_size() const {
    return static_cast<int>(
        std::count_if(exponents.begin(), exponents.end(), [](int r) { return r > 0; }));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents <=> b.exponents;
  }
};

using TermMap = std::map<Exponents, FieldElement>;

namespace detail {

inline void basis_rec(const WeightSystem& ws, std::size_t var, long remaining,
                      Exponents& current, std::vector<Monomial>& out) {
  if (var + 1 == ws.size()) {
    if (remaining % ws[var] == 0) {
      current[var] = static_cast<int>(remaining / ws[var]);
      out.emplace_back(ws, current);
    }
    return;
  }
  for (long r = 0; r * ws[var] <= remaining; ++r) {
    current[var] = static_cast<int>(r);
    basis_rec(ws, var + 1, remaining - r * ws[var], current, out);
  }
  current[var] = 0;
}

}  // namespace detail

/// All monomials of weighted degree d, ascending lexicographic order of the
/// exponent tuples. Empty when d is outside the semigroup spanned by weights.
inline std::vector<Monomial> monomial_basis(const WeightSystem& ws, long d) {
  if (d < 0) throw InvalidArgument("degree must be nonnegative");
  std::vector<Monomial> out;
  Exponents current(ws.size(), 0);
  detail::basis_rec(ws, 0, d, current, out);
  return out;
}

/// dim S_d, by counting representations of d (coin-change recurrence).
inline std::uint64_t dim_Sd(const WeightSystem& ws, long d) {
  if (d < 0) throw InvalidArgument("degree must be nonnegative");
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int a : ws.weights())
    for (long n = a; n <= d; ++n) ways[n] += ways[n - a];
  return ways[d];
}

/// Lattice-point closed form for ws = (1, a, b) and lcm(a, b) | d.
inline std::uint64_t dim_closed_form_1ab(long a, long b, long d) {
  return static_cast<std::uint64_t>(((d + 2 * a) * (d + b) + (std::gcd(a, b) - a) * d) /
                                    (2 * a * b));
}

/// Closed form for ws = (1, 1, a) and a | d.
inline std::uint64_t dim_closed_form_11a(long a, long d) {
  return static_cast<std::uint64_t>((d + a) * (d + 2) / (2 * a));
}

class WeightedPolynomial {
 public:
  WeightedPolynomial(WeightSystem ws, long degree) : ws_(std::move(ws)), degree_(degree) {
    if (degree_ < 0) throw InvalidArgument("degree must be nonnegative");
  }

  static WeightedPolynomial monomial(const WeightSystem& ws, const Exponents& exps,
                                     FieldElement coeff) {
    WeightedPolynomial f(ws, weighted_degree(ws, exps));
    f.set_term(exps, coeff);
    return f;
  }

  const WeightSystem& weights() const { return ws_; }
  long degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  FieldElement coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? FieldElement{} : it->second;
  }

  /// Adds c * X^exps; the monomial must have the polynomial's degree.
  void add_term(const FieldCtx& ctx, const Exponents& exps, FieldElement c) {
    check_term(exps);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
      it->second = ctx.add(it->second, c);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Overwrites the coefficient of X^exps (a zero coefficient removes it).
  void set_term(const Exponents& exps, FieldElement c) {
    check_term(exps);
    if (c.is_zero())
      terms_.erase(exps);
    else
      terms_[exps] = c;
  }

  friend bool operator==(const WeightedPolynomial& a, const WeightedPolynomial& b) {
    return a.ws_ == b.ws_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:

  void check_term(const Exponents& exps) const {
    if (exps.size() != ws_.size())
      throw InvalidArgument("monomial arity does not match the weight system");
    for (int r : exps)
      if (r < 0) throw InvalidArgument("negative exponent");
    if (weighted_degree(ws_, exps) != degree_)
      throw InvalidArgument("term of weighted degree " +
                            std::to_string(weighted_degree(ws_, exps)) +
                            " in a polynomial of degree " + std::to_string(degree_));
  }

  WeightSystem ws_;
  long degree_;
  TermMap terms_;
};

inline WeightedPolynomial add(const FieldCtx& ctx, const WeightedPolynomial& f,
                              const WeightedPolynomial& g) {
  if (f.weights() != g.weights() || f.degree() != g.degree())
    throw InvalidArgument("adding polynomials of different degree or weights");
  WeightedPolynomial out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(ctx, e, c);
  return out;
}

inline WeightedPolynomial scale(const FieldCtx& ctx, const WeightedPolynomial& f,
                                FieldElement c) {
  WeightedPolynomial out(f.weights(), f.degree());
  for (const auto& [e, coeff] : f.terms()) out.add_term(ctx, e, ctx.mul(coeff, c));
  return out;
}

inline WeightedPolynomial multiply(const FieldCtx& ctx, const WeightedPolynomial& f,
                                   const WeightedPolynomial& g) {
  if (f.weights() != g.weights())
    throw InvalidArgument("multiplying polynomials over different weights");
  WeightedPolynomial out(f.weights(), f.degree() + g.degree());
  Exponents e(f.weights().size());
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      out.add_term(ctx, e, ctx.mul(cf, cg));
    }
  return out;
}

inline WeightedPolynomial constant(const FieldCtx& ctx, const WeightSystem& ws) {
  return WeightedPolynomial::monomial(ws, Exponents(ws.size(), 0), ctx.one());
}

inline WeightedPolynomial power(const FieldCtx& ctx, const WeightedPolynomial& f,
                                unsigned n) {
  WeightedPolynomial out = constant(ctx, f.weights());
  for (unsigned i = 0; i < n; ++i) out = multiply(ctx, out, f);
  return out;
}

/// Replaces X_var by g, where deg g equals the weight of X_var.
inline WeightedPolynomial substitute(const FieldCtx& ctx, const WeightedPolynomial& f,
                                     std::size_t var, const WeightedPolynomial& g) {
  const WeightSystem& ws = f.weights();
  if (g.weights() != ws || g.degree() != ws[var])
    throw InvalidArgument("substituted polynomial must have the weight of X" +
                          std::to_string(var));
  WeightedPolynomial out(ws, f.degree());
  std::map<int, WeightedPolynomial> powers;
  for (const auto& [e, c] : f.terms()) {
    Exponents rest = e;
    rest[var] = 0;
    auto it = powers.find(e[var]);
    if (it == powers.end())
      it = powers.emplace(e[var], power(ctx, g, static_cast<unsigned>(e[var]))).first;
    out = add(ctx, out, multiply(ctx, WeightedPolynomial::monomial(ws, rest, c), it->second));
  }
  return out;
}

inline FieldElement evaluate_monomial(const FieldCtx& ctx, std::span<const int> exps,
                                      std::span<const FieldElement> x) {
  FieldElement v = ctx.one();
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) v = ctx.mul(v, ctx.pow(x[i], static_cast<std::uint64_t>(exps[i])));
  return v;
}

inline FieldElement evaluate(const FieldCtx& ctx, const WeightedPolynomial& f,
                             std::span<const FieldElement> x) {
  if (x.size() != f.weights().size())
    throw InvalidArgument("evaluation point has the wrong number of coordinates");
  FieldElement v = ctx.zero();
  for (const auto& [e, c] : f.terms())
    v = ctx.add(v, ctx.mul(c, evaluate_monomial(ctx, e, x)));
  return v;
}

/// Polynomial in m affine variables Y_1..Y_m (exponent tuples of length m).
struct AffinePolynomial {
  std::size_t num_vars = 0;
  TermMap terms;

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  bool is_zero() const { return terms.empty(); }

  void add_term(const FieldCtx& ctx, const Exponents& exps, FieldElement c) {
    if (exps.size() != num_vars) throw InvalidArgument("affine term arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(exps, c);
    if (!inserted) {
      it->second = ctx.add(it->second, c);
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend bool operator==(const AffinePolynomial&, const AffinePolynomial&) = default;
};

inline FieldElement evaluate(const FieldCtx& ctx, const AffinePolynomial& f,
                             std::span<const FieldElement> y) {
  FieldElement v = ctx.zero();
  for (const auto& [e, c] : f.terms) v = ctx.add(v, ctx.mul(c, evaluate_monomial(ctx, e, y)));
  return v;
}

/// F(1, Y_1, ..., Y_m); requires a_0 = 1.
inline AffinePolynomial dehomogenize_chart0(const WeightedPolynomial& f) {
  if (f.weights()[0] != 1)
    throw InvalidArgument("dehomogenization on the X0 chart needs a_0 = 1");
  AffinePolynomial out{f.weights().size() - 1, {}};
  for (const auto& [e, c] : f.terms()) out.terms.emplace(Exponents(e.begin() + 1, e.end()), c);
  return out;
}

/// Pads each term with the minimal power of X_0; the degree is the largest
/// weighted term degree. Requires a_0 = 1 and f nonzero.
inline WeightedPolynomial homogenize_chart0(const AffinePolynomial& f, const WeightSystem& ws) {
  if (ws[0] != 1) throw InvalidArgument("homogenization on the X0 chart needs a_0 = 1");
  if (f.num_vars + 1 != ws.size())
    throw InvalidArgument("affine polynomial arity does not match the weights");
  if (f.is_zero()) throw InvalidArgument("cannot homogenize the zero polynomial");
  long d = 0;
  for (const auto& [e, c] : f.terms) {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(ws[i + 1]) * e[i];
    d = std::max(d, w);
  }
  WeightedPolynomial out(ws, d);
  for (const auto& [e, c] : f.terms) {
    Exponents full(ws.size(), 0);
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      full[i + 1] = e[i];
      w += static_cast<long>(ws[i + 1]) * e[i];
    }
    full[0] = static_cast<int>(d - w);
    out.set_term(full, c);
  }
  return out;
}

/// Text form: terms "c*X0^r0*X2^r2" joined by " + ", in descending order of
/// exponent tuples; coefficients are field indices and zero exponents are
/// omitted. The zero polynomial prints as "0".
inline std::string to_string(const WeightedPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += std::to_string(it->second.index());
    for (std::size_t i = 0; i < it->first.size(); ++i)
      if (it->first[i] > 0)
        out += "*X" + std::to_string(i) + "^" + std::to_string(it->first[i]);
  }
  return out;
}

/// Parses the text form. Coefficients default to 1, "Xi" means "Xi^1"; the
/// degree is taken from the terms, which must agree.
inline WeightedPolynomial parse_polynomial(std::string_view text, const WeightSystem& ws,
                                           const FieldCtx& ctx) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) -> InvalidArgument {
    return InvalidArgument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty input");
  std::vector<std::pair<Exponents, FieldElement>> terms;
  std::size_t pos = 0;
  auto read_uint = [&]() -> long {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 9) throw fail("expected a number at offset " + std::to_string(start));
    return std::stol(s.substr(start, pos - start));
  };
  while (true) {
    Exponents e(ws.size(), 0);
    FieldElement c = ctx.one();
    bool expect_factor = true;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      long v = read_uint();
      if (v >= static_cast<long>(ctx.order())) throw fail("coefficient outside the field");
      c = ctx.element(static_cast<std::uint32_t>(v));
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    while (expect_factor) {
      if (pos >= s.size() || (s[pos] != 'X' && s[pos] != 'x')) throw fail("expected a variable");
      ++pos;
      long var = read_uint();
      if (var >= static_cast<long>(ws.size())) throw fail("variable index out of range");
      long r = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        r = read_uint();
      }
      e[var] += static_cast<int>(r);
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    terms.emplace_back(std::move(e), c);
    if (pos == s.size()) break;
    if (s[pos] != '+') throw fail("expected '+' at offset " + std::to_string(pos));
    ++pos;
    if (pos == s.size()) throw fail("dangling '+'");
  }
  const long d = weighted_degree(ws, terms.front().first);
  WeightedPolynomial out(ws, d);
  for (const auto& [e, c] : terms) {
    if (weighted_degree(ws, e) != d) throw fail("terms have different weighted degrees");
    out.add_term(ctx, e, c);
  }
  return out;
}

}  // namespace wps
