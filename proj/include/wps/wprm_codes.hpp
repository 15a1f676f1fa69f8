#pragma once

// Reed-Muller (RM), projective Reed-Muller (PRM) and weighted projective
// Reed-Muller (WPRM) codes.
//
// All three are built the same way: rows are the lex-ordered monomials of
// S_d, columns are rational points x in chart W_i, and the entry is
// F(x) / x_i^{d/a_i}. RM uses classical weights and only the affine points
// (1 : x_1 : ... : x_m); PRM is WPRM with all weights equal to 1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wps/delorme.hpp"
#include "wps/errors.hpp"
#include "wps/finite_field.hpp"
#include "wps/weighted_poly.hpp"
#include "wps/weighted_space.hpp"
#include "wps/zero_sets.hpp"

namespace wps {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::uint64_t kDefaultCodewordBudget = 100'000'000;
// Auto mode confirms formula values by exhaustive search below this many
// codeword classes.
inline constexpr std::uint64_t kAutoCrossCheckBudget = 1'000'000;

enum class CodeKind { RM, PRM, WPRM };

inline const char* to_string(CodeKind k) {
  switch (k) {
    case CodeKind::RM: return "RM";
    case CodeKind::PRM: return "PRM";
    default: return "WPRM";
  }
}

inline CodeKind parse_code_kind(std::string_view s) {
  std::string t(s);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "rm") return CodeKind::RM;
  if (t == "prm") return CodeKind::PRM;
  if (t == "wprm") return CodeKind::WPRM;
  throw InvalidArgument("unknown code kind '" + std::string(s) + "' (expected rm, prm or wprm)");
}

/// Dense row-major matrix of field indices.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  const std::uint32_t* row(std::size_t r) const { return data.data() + r * cols; }
};

/// Nonzero rows of the reduced row echelon form.
inline Matrix row_reduce(const FieldCtx& ctx, Matrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const std::uint32_t inv = ctx.inv_idx(m.at(rank, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = ctx.mul_idx(inv, m.at(rank, c));
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const std::uint32_t f = ctx.neg_idx(m.at(r, col));
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = ctx.add_idx(m.at(r, c), ctx.mul_idx(f, m.at(rank, c)));
    }
    ++rank;
  }
  m.rows = rank;
  m.data.resize(rank * m.cols);
  return m;
}

inline std::size_t rank(const FieldCtx& ctx, const Matrix& m) { return row_reduce(ctx, m).rows; }

struct CodeInstance {
  CodeKind kind = CodeKind::WPRM;
  std::uint32_t q = 0;
  int m = 0;
  long d = 0;
  WeightSystem ws = WeightSystem::classical(0);
  std::vector<WeightedPoint> points;
  std::vector<Monomial> monomials;
  Matrix generator;  // monomials.size() x points.size()

  std::size_t length() const { return points.size(); }
};

/// c_x(F) = F(x) / x_i^{d/a_i} for x in chart W_i.
inline FieldElement wprm_encode_column(const FieldCtx& ctx, const WeightedPolynomial& f,
                                       const WeightedPoint& x) {
  const WeightSystem& ws = f.weights();
  if (f.degree() % ws.lcm() != 0)
    throw InvalidArgument("degree " + std::to_string(f.degree()) +
                          " is not a multiple of lcm(" + ws.to_string() + ") = " +
                          std::to_string(ws.lcm()));
  if (x.coords.size() != ws.size()) throw InvalidArgument("point has the wrong arity");
  const int i = detail::chart_of(x.coords);
  if (i < 0) throw InvalidArgument("the all-zero tuple is not a projective point");
  const FieldElement norm =
      ctx.pow(x.coords[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(f.degree() / ws[i]));
  return ctx.div(evaluate(ctx, f, x.coords), norm);
}

inline std::vector<FieldElement> encode(const FieldCtx& ctx, const CodeInstance& code,
                                        const WeightedPolynomial& f) {
  if (f.weights() != code.ws || f.degree() != code.d)
    throw InvalidArgument("polynomial is not in the code's message space");
  std::vector<FieldElement> out;
  out.reserve(code.points.size());
  for (const auto& x : code.points) out.push_back(wprm_encode_column(ctx, f, x));
  return out;
}

inline std::uint64_t weight(std::span<const FieldElement> word) {
  return static_cast<std::uint64_t>(
      std::count_if(word.begin(), word.end(), [](FieldElement x) { return !x.is_zero(); }));
}

inline CodeInstance build_code(const FieldCtx& ctx, CodeKind kind, int m, long d,
                               std::optional<WeightSystem> ws = std::nullopt) {
  if (m < 1) throw InvalidArgument("code dimension parameter m must be at least 1");
  if (d < 0) throw InvalidArgument("degree must be nonnegative");
  CodeInstance code;
  code.kind = kind;
  code.q = ctx.order();
  code.m = m;
  code.d = d;
  if (kind == CodeKind::WPRM) {
    if (!ws) throw InvalidArgument("WPRM codes need a weight system");
    if (ws->dim() != m)
      throw InvalidArgument("weights (" + ws->to_string() + ") do not span a space of dimension " +
                            std::to_string(m));
    if (d % ws->lcm() != 0)
      throw InvalidArgument("WPRM degree " + std::to_string(d) + " must be a multiple of lcm(" +
                            ws->to_string() + ") = " + std::to_string(ws->lcm()));
    code.ws = *ws;
  } else {
    code.ws = WeightSystem::classical(m);
  }
  if (kind == CodeKind::RM) {
    const std::uint64_t total = ipow(code.q, static_cast<unsigned>(m));
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(m));
    for (std::uint64_t c = 0; c < total; ++c) {
      std::uint64_t rest = c;
      for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rest % code.q);
        rest /= code.q;
      }
      WeightedPoint pt;
      pt.coords.push_back(ctx.one());
      for (std::uint32_t x : digits) pt.coords.push_back(ctx.element(x));
      pt.chart = 0;
      code.points.push_back(std::move(pt));
    }
  } else {
    code.points = enumerate_points(code.ws, ctx).points();
  }
  code.monomials = monomial_basis(code.ws, d);
  code.generator = Matrix(code.monomials.size(), code.points.size());
  for (std::size_t r = 0; r < code.monomials.size(); ++r) {
    const auto f = WeightedPolynomial::monomial(code.ws, code.monomials[r].exponents, ctx.one());
    for (std::size_t c = 0; c < code.points.size(); ++c)
      code.generator.at(r, c) = wprm_encode_column(ctx, f, code.points[c]).index();
  }
  return code;
}

/// Exact minimum distance by enumerating all codeword classes up to scaling.
inline std::uint64_t min_distance_exhaustive(const FieldCtx& ctx, const CodeInstance& code,
                                             std::uint64_t budget = kDefaultCodewordBudget) {
  const Matrix basis = row_reduce(ctx, code.generator);
  if (basis.rows == 0) throw InvalidArgument("the zero code has no minimum distance");
  const long double est = projective_candidates(ctx.order(), basis.rows);
  if (est > static_cast<long double>(budget))
    throw BudgetExceeded("exhaustive minimum distance of a code of dimension " +
                             std::to_string(basis.rows),
                         est, budget);
  const SweepBest best = sweep_max_zeros(ctx, basis.data.data(), basis.rows, basis.cols);
  return basis.cols - best.value;
}

enum class DminMethod { Auto, Formula, Exhaustive };
enum class DminSource { Formula, Exhaustive, WitnessUpperBound };

inline DminMethod parse_dmin_method(std::string_view s) {
  if (s == "auto") return DminMethod::Auto;
  if (s == "formula") return DminMethod::Formula;
  if (s == "exhaustive") return DminMethod::Exhaustive;
  throw InvalidArgument("unknown method '" + std::string(s) +
                        "' (expected auto, formula or exhaustive)");
}

inline const char* to_string(DminSource s) {
  switch (s) {
    case DminSource::Formula: return "formula";
    case DminSource::Exhaustive: return "exhaustive";
    default: return "witness-upper-bound";
  }
}

struct CodeParameters {
  CodeKind kind = CodeKind::WPRM;
  std::uint32_t q = 0;
  int m = 0;
  long d = 0;
  WeightSystem ws = WeightSystem::classical(0);
  std::uint64_t n = 0, k = 0, d_min = 0;
  DminSource source = DminSource::Formula;
  bool exact = true;
  bool cross_checked = false;  // formula confirmed by exhaustive search
  std::optional<std::uint64_t> witness_weight;
  Rational lambda, rate, delta;
};

struct FormulaValue {
  std::uint64_t d_min = 0;
  std::string rule;
};

/// Closed-form minimum distance when its hypotheses hold: (q-d)q^{m-1} for
/// RM with d < q, (q-d+1)q^{m-1} for PRM with d <= q, and for WPRM the same
/// after Delorme normalization, or (q - d/a1 + 1)q when the normalized plane
/// is (1, a1, a2) with d/a1 <= q.
inline std::optional<FormulaValue> dmin_formula(const CodeInstance& code) {
  const std::uint64_t q = code.q;
  if (code.d < 1) return std::nullopt;
  if (code.kind == CodeKind::RM) {
    if (code.d >= static_cast<long>(q)) return std::nullopt;
    return FormulaValue{(q - static_cast<std::uint64_t>(code.d)) * ipow(q, code.m - 1), "rm"};
  }
  WeightSystem ws = code.ws;
  long d = code.d;
  for (const auto& step : delorme_normalize(ws)) {
    d /= step.b;
    ws = step.target;
  }
  if (ws.is_classical()) {
    if (d > static_cast<long>(q)) return std::nullopt;
    return FormulaValue{(q - static_cast<std::uint64_t>(d) + 1) * ipow(q, ws.dim() - 1), "prm"};
  }
  std::vector<int> w = ws.weights();
  std::sort(w.begin(), w.end());
  if (w.size() == 3 && w[0] == 1 && d % std::lcm(w[1], w[2]) == 0) {
    const long t = d / w[1];
    if (t > static_cast<long>(q)) return std::nullopt;
    return FormulaValue{(q - static_cast<std::uint64_t>(t) + 1) * q, "plane"};
  }
  return std::nullopt;
}

/// Codeword of the extremal polynomial; its weight bounds d_min from above.
inline std::optional<WeightedPolynomial> dmin_witness(const FieldCtx& ctx,
                                                      const CodeInstance& code) {
  if (code.kind == CodeKind::RM) {
    // prod (x_1 - c_j) over d distinct values: d q^{m-1} affine zeros.
    if (code.d > static_cast<long>(code.q)) return std::nullopt;
    std::vector<std::uint32_t> choice;
    if (code.d > 0) choice.push_back(code.q);
    for (long j = 1; j < code.d; ++j) choice.push_back(static_cast<std::uint32_t>(j));
    return serre_witness(ctx, code.ws, code.d, choice);
  }
  return serre_witness(ctx, code.ws, code.d);
}

inline CodeParameters code_parameters(const FieldCtx& ctx, const CodeInstance& code,
                                      DminMethod method = DminMethod::Auto,
                                      std::uint64_t budget = kDefaultCodewordBudget) {
  CodeParameters out;
  out.kind = code.kind;
  out.q = code.q;
  out.m = code.m;
  out.d = code.d;
  out.ws = code.ws;
  out.n = code.length();
  const Matrix basis = row_reduce(ctx, code.generator);
  out.k = basis.rows;
  if (out.k == 0) throw InvalidArgument("the code is zero; minimum distance undefined");

  if (auto w = dmin_witness(ctx, code)) {
    const auto word = encode(ctx, code, *w);
    if (weight(word) > 0) out.witness_weight = weight(word);
  }
  const auto formula = dmin_formula(code);
  const long double classes = projective_candidates(ctx.order(), out.k);

  switch (method) {
    case DminMethod::Formula:
      if (!formula)
        throw InvalidArgument(std::string("no closed-form minimum distance applies to this ") +
                              to_string(code.kind) + " instance");
      out.d_min = formula->d_min;
      out.source = DminSource::Formula;
      break;
    case DminMethod::Exhaustive:
      out.d_min = min_distance_exhaustive(ctx, code, budget);
      out.source = DminSource::Exhaustive;
      break;
    case DminMethod::Auto:
      if (formula) {
        out.d_min = formula->d_min;
        out.source = DminSource::Formula;
        if (classes <= static_cast<long double>(std::min(budget, kAutoCrossCheckBudget))) {
          const auto ex = min_distance_exhaustive(ctx, code, budget);
          if (ex != out.d_min)
            throw std::logic_error("formula minimum distance " + std::to_string(out.d_min) +
                                   " disagrees with exhaustive value " + std::to_string(ex));
          out.cross_checked = true;
        }
      } else if (classes <= static_cast<long double>(budget)) {
        out.d_min = min_distance_exhaustive(ctx, code, budget);
        out.source = DminSource::Exhaustive;
      } else if (out.witness_weight) {
        out.d_min = *out.witness_weight;
        out.source = DminSource::WitnessUpperBound;
        out.exact = false;
      } else {
        throw BudgetExceeded("minimum distance without formula or witness", classes, budget);
      }
      break;
  }
  if (out.witness_weight && *out.witness_weight < out.d_min)
    throw std::logic_error("witness codeword of weight " + std::to_string(*out.witness_weight) +
                           " is lighter than the minimum distance " + std::to_string(out.d_min));
  const auto n = static_cast<std::int64_t>(out.n);
  out.rate = Rational(static_cast<std::int64_t>(out.k), n);
  out.delta = Rational(static_cast<std::int64_t>(out.d_min), n);
  out.lambda = out.rate + out.delta;
  return out;
}

/// Decimal rendering truncated (not rounded) to `places` digits.
inline std::string truncate_decimal(const Rational& r, int places = 3) {
  std::int64_t num = r.numerator(), den = r.denominator();
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const std::int64_t whole = num / den;
  const std::int64_t frac = (num % den) * scale / den;
  std::string digits = std::to_string(frac);
  digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
  return sign + std::to_string(whole) + (places > 0 ? "." + digits : "");
}

inline std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct ThresholdCheck {
  std::string name;  // "weights-122", "weights-124" or "weights-1ab"
  WeightSystem ws = WeightSystem::classical(0);
  std::uint32_t q = 0;
  long d = 0;
  long k = 0;
  Rational threshold;
  bool applies = false;  // q >= threshold
  Rational lambda_wprm, lambda_prm;
  bool holds = false;  // lambda_wprm >= lambda_prm
};

struct LambdaReport {
  std::vector<std::size_t> ranking;  // indices by decreasing lambda, stable
  std::vector<ThresholdCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ThresholdCheck& c) { return !c.applies || c.holds; });
  }
};

/// Orders codes by lambda and, for every WPRM code on (1, a, a*beta) with a
/// PRM code of the same q and degree d <= q in the list, evaluates the
/// threshold on q above which lambda(WPRM) >= lambda(PRM) is claimed.
inline LambdaReport lambda_compare(const std::vector<CodeParameters>& codes) {
  LambdaReport rep;
  rep.ranking.resize(codes.size());
  std::iota(rep.ranking.begin(), rep.ranking.end(), std::size_t{0});
  std::stable_sort(rep.ranking.begin(), rep.ranking.end(),
                   [&](std::size_t a, std::size_t b) { return codes[a].lambda > codes[b].lambda; });
  for (const auto& w : codes) {
    if (w.kind != CodeKind::WPRM || w.m != 2 || w.d > static_cast<long>(w.q)) continue;
    std::vector<int> a = w.ws.weights();
    std::sort(a.begin(), a.end());
    if (a[0] != 1 || a[1] < 2 || a[2] % a[1] != 0) continue;
    const long alpha = a[1], beta = a[2] / a[1];
    if (w.d % (alpha * beta) != 0) continue;
    const long k = w.d / (alpha * beta);
    for (const auto& p : codes) {
      if (p.kind != CodeKind::PRM || p.m != 2 || p.q != w.q || p.d != w.d) continue;
      auto add = [&](std::string name, Rational threshold) {
        ThresholdCheck c;
        c.name = std::move(name);
        c.ws = w.ws;
        c.q = w.q;
        c.d = w.d;
        c.k = k;
        c.threshold = threshold;
        c.applies = Rational(w.q) >= threshold;
        c.lambda_wprm = w.lambda;
        c.lambda_prm = p.lambda;
        c.holds = w.lambda >= p.lambda;
        rep.checks.push_back(std::move(c));
      };
      if (alpha == 2 && beta == 1) add("weights-122", Rational(3 * k + 3, 2));
      if (alpha == 2 && beta == 2) add("weights-124", Rational(7 * k + 4, 2));
      add("weights-1ab",
          Rational(k * beta * beta * alpha * alpha + 3 * beta * alpha - k * beta - beta - 2,
                   2 * beta * (alpha - 1)));
    }
  }
  return rep;
}

inline const char* kTableCsvHeader =
    "code,q,m,d,weights,n,k,d_min,d_min_source,witness_weight,lambda_exact,lambda";

inline std::string table_csv_row(const CodeParameters& p) {
  std::ostringstream out;
  out << to_string(p.kind) << ',' << p.q << ',' << p.m << ',' << p.d << ','
      << p.ws.to_string(';') << ',' << p.n << ',' << p.k << ',' << p.d_min << ','
      << to_string(p.source) << ',';
  if (p.witness_weight) out << *p.witness_weight;
  out << ',' << rational_string(p.lambda) << ',' << truncate_decimal(p.lambda);
  return out.str();
}

struct TableEntry {
  CodeKind kind;
  std::optional<WeightSystem> ws;
};

/// RM, PRM and WPRM codes over F_q in degree d on the plane. WPRM entries
/// whose lcm does not divide d are skipped.
inline std::vector<CodeParameters> comparison_table(const FieldCtx& ctx, long d,
                                                    const std::vector<TableEntry>& entries,
                                                    DminMethod method = DminMethod::Auto,
                                                    std::uint64_t budget = kDefaultCodewordBudget) {
  std::vector<CodeParameters> out;
  for (const auto& e : entries) {
    if (e.kind == CodeKind::WPRM && d % e.ws->lcm() != 0) continue;
    const int m = e.ws ? e.ws->dim() : 2;
    out.push_back(code_parameters(ctx, build_code(ctx, e.kind, m, d, e.ws), method, budget));
  }
  return out;
}

inline std::vector<TableEntry> plane_table_entries() {
  return {{CodeKind::RM, std::nullopt},
          {CodeKind::PRM, std::nullopt},
          {CodeKind::WPRM, WeightSystem({1, 2, 2})},
          {CodeKind::WPRM, WeightSystem({1, 2, 4})},
          {CodeKind::WPRM, WeightSystem({1, 2, 8})},
          {CodeKind::WPRM, WeightSystem({1, 4, 4})},
          {CodeKind::WPRM, WeightSystem({1, 16, 16})}};
}

inline std::string table_csv(const std::vector<CodeParameters>& rows) {
  std::string out = std::string(kTableCsvHeader) + "\n";
  for (const auto& r : rows) out += table_csv_row(r) + "\n";
  return out;
}

/// Header line "q m d weights n k", then one row per basis monomial.
inline std::string matrix_text(const CodeInstance& code) {
  std::ostringstream out;
  out << code.q << ' ' << code.m << ' ' << code.d << ' ' << code.ws.to_string() << ' '
      << code.generator.cols << ' ' << code.generator.rows << '\n';
  for (std::size_t r = 0; r < code.generator.rows; ++r) {
    for (std::size_t c = 0; c < code.generator.cols; ++c)
      out << (c ? " " : "") << code.generator.at(r, c);
    out << '\n';
  }
  return out.str();
}

}  // namespace wps
