#pragma once

// Rational points of the weighted projective space P(a_0, ..., a_m) over F_q.
//
// Two nonzero tuples x, y in F_q^{m+1} represent the same rational point iff
// y_i = t^{a_i} x_i for some t in the algebraic closure. Restricted to F_q
// tuples this is: x and y have the same support S and y_i = u^{a_i/g} x_i for
// some u in F_q^*, where g = gcd(a_i : i in S). Every class has exactly q-1
// members. The canonical representative of a class is its lexicographically
// smallest member under the index order of field elements.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "wps/errors.hpp"
#include "wps/finite_field.hpp"
#include "wps/weights.hpp"

namespace wps {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct WeightedPoint {
  std::vector<FieldElement> coords;
  // Index i of the stratum W_i: coords[j] == 0 for j < i and coords[i] != 0.
  int chart = 0;

  friend bool operator==(const WeightedPoint& a, const WeightedPoint& b) {
    return a.coords == b.coords;
  }
  friend std::strong_ordering operator<=>(const WeightedPoint& a,
                                          const WeightedPoint& b) {
    return std::lexicographical_compare_three_way(
        a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ':';
      out += std::to_string(coords[i].index());
    }
    return out + ")";
  }
};

namespace detail {

// Exponents u -> u^{a_i/g} of the F_q^* action restricted to the support of
// `coords`; zero outside the support.
inline std::vector<std::uint64_t> class_exponents(const WeightSystem& ws,
                                                  std::span<const std::uint32_t> coords) {
  long g = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) g = std::gcd(g, static_cast<long>(ws[i]));
  std::vector<std::uint64_t> exps(coords.size(), 0);
  if (g == 0) return exps;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) exps[i] = static_cast<std::uint64_t>(ws[i] / g);
  return exps;
}

inline int chart_of(std::span<const FieldElement> coords) {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) return static_cast<int>(i);
  return -1;
}

inline void check_raw(const WeightSystem& ws, const FieldCtx& ctx,
                      std::span<const FieldElement> raw) {
  if (raw.size() != ws.size())
    throw InvalidArgument("coordinate tuple has " + std::to_string(raw.size()) +
                          " entries, weight system needs " +
                          std::to_string(ws.size()));
  for (FieldElement x : raw)
    if (x.index() >= ctx.order())
      throw InvalidArgument("coordinate outside the field");
  if (chart_of(raw) < 0)
    throw InvalidArgument("the all-zero tuple is not a projective point");
}

}  // namespace detail

/// All F_q-tuples representing the same rational point as `raw`, sorted.
inline std::vector<std::vector<FieldElement>> representatives(
    const WeightSystem& ws, const FieldCtx& ctx, std::span<const FieldElement> raw) {
  detail::check_raw(ws, ctx, raw);
  std::vector<std::uint32_t> idx(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) idx[i] = raw[i].index();
  const auto exps = detail::class_exponents(ws, idx);
  std::set<std::vector<FieldElement>> members;
  for (std::uint32_t k = 0; k + 1 < ctx.order(); ++k) {
    const FieldElement u = ctx.generator_power(k);
    std::vector<FieldElement> y(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
      y[i] = raw[i].is_zero() ? ctx.zero() : ctx.mul(ctx.pow(u, exps[i]), raw[i]);
    members.insert(std::move(y));
  }
  return {members.begin(), members.end()};
}

/// Canonical representative of the point represented by `raw`.
inline WeightedPoint canonicalize(const WeightSystem& ws, const FieldCtx& ctx,
                                  std::span<const FieldElement> raw) {
  auto reps = representatives(ws, ctx, raw);
  WeightedPoint out{std::move(reps.front()), 0};
  out.chart = detail::chart_of(out.coords);
  return out;
}

struct OrbitInfo {
  std::uint64_t size = 0;
  bool char_divides_weight = false;
};

/// Number of F_q-representatives of the point given by `raw`.
inline OrbitInfo orbit_size(const WeightSystem& ws, const FieldCtx& ctx,
                            std::span<const FieldElement> raw) {
  return {representatives(ws, ctx, raw).size(),
          ws.char_divides_weight(ctx.characteristic())};
}

/// The rational points of P(a)(F_q) in canonical form and lexicographic order.
class PointSet {
 public:
  PointSet(WeightSystem ws, std::uint32_t q, std::vector<WeightedPoint> points,
           bool char_divides_weight)
      : ws_(std::move(ws)),
        q_(q),
        points_(std::move(points)),
        char_divides_weight_(char_divides_weight) {}

  const WeightSystem& weights() const { return ws_; }
  std::uint32_t field_order() const { return q_; }
  const std::vector<WeightedPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const WeightedPoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  bool char_divides_weight() const { return char_divides_weight_; }

  /// Position of a canonical point, or -1.
  long find(const WeightedPoint& pt) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), pt);
    if (it == points_.end() || *it != pt) return -1;
    return it - points_.begin();
  }

 private:
  WeightSystem ws_;
  std::uint32_t q_;
  std::vector<WeightedPoint> points_;
  bool char_divides_weight_;
};

/// Sweeps all q^{m+1} tuples in lexicographic order; the first unvisited tuple
/// of each class is its canonical representative.
inline PointSet enumerate_points(const WeightSystem& ws, const FieldCtx& ctx,
                                 std::uint64_t budget = kDefaultEnumerationBudget) {
  const std::uint32_t q = ctx.order();
  const std::size_t width = ws.size();
  const long double tuples = ipow_ld(q, static_cast<unsigned>(width));
  if (tuples > static_cast<long double>(budget))
    throw BudgetExceeded("point enumeration of P(" + ws.to_string() + ") over F_" +
                             std::to_string(q),
                         tuples, budget);
  const std::uint64_t total = ipow(q, static_cast<unsigned>(width));
  std::vector<bool> visited(total, false);
  std::vector<WeightedPoint> points;
  points.reserve(static_cast<std::size_t>(projective_count(q, ws.dim())));
  std::vector<std::uint32_t> digits(width), image(width);
  for (std::uint64_t code = 1; code < total; ++code) {
    if (visited[code]) continue;
    std::uint64_t rest = code;
    for (std::size_t i = width; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    const auto exps = detail::class_exponents(ws, digits);
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      std::uint64_t image_code = 0;
      for (std::size_t i = 0; i < width; ++i) {
        const std::uint32_t y =
            digits[i] == 0
                ? 0
                : ctx.mul_idx(ctx.generator_power(k * exps[i]).index(), digits[i]);
        image_code = image_code * q + y;
      }
      visited[image_code] = true;
    }
    WeightedPoint pt;
    pt.coords.reserve(width);
    for (std::uint32_t d : digits) pt.coords.push_back(ctx.element(d));
    pt.chart = detail::chart_of(pt.coords);
    points.push_back(std::move(pt));
  }
  return PointSet(ws, q, std::move(points), ws.char_divides_weight(ctx.characteristic()));
}

/// Every m-element subset of the weights has gcd 1.
inline bool is_well_formed(const WeightSystem& ws) {
  if (ws.size() == 1) return true;
  std::vector<int> rest;
  for (std::size_t skip = 0; skip < ws.size(); ++skip) {
    rest.clear();
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (i != skip) rest.push_back(ws[i]);
    if (gcd_of(rest) != 1) return false;
  }
  return true;
}

struct SingularComponent {
  int prime = 0;
  std::vector<int> indices;  // I(p) = { i : p | a_i }
  int dimension = 0;         // |I(p)| - 1
};

/// Set-level singular locus: the union of S(p) = { x : x_i = 0 for i not in
/// I(p) } over primes p dividing some weight.
struct SingularLocusReport {
  std::vector<int> sigma;
  std::vector<SingularComponent> components;
  bool smooth() const { return sigma.empty(); }

  /// Whether the point lies on some component.
  bool contains(const WeightedPoint& pt) const {
    for (const auto& comp : components) {
      bool inside = true;
      for (std::size_t i = 0; i < pt.coords.size() && inside; ++i)
        if (!pt.coords[i].is_zero() &&
            std::find(comp.indices.begin(), comp.indices.end(), static_cast<int>(i)) ==
                comp.indices.end())
          inside = false;
      if (inside) return true;
    }
    return false;
  }
};

inline SingularLocusReport singular_locus(const WeightSystem& ws) {
  if (!is_well_formed(ws))
    throw InvalidArgument("singular locus requires well-formed weights, got (" +
                          ws.to_string() + ")");
  std::set<int> primes;
  for (int a : ws.weights()) {
    int n = a;
    for (int p = 2; p * p <= n; ++p)
      while (n % p == 0) primes.insert(p), n /= p;
    if (n > 1) primes.insert(n);
  }
  SingularLocusReport report;
  for (int p : primes) {
    SingularComponent comp{p, {}, 0};
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (ws[i] % p == 0) comp.indices.push_back(static_cast<int>(i));
    comp.dimension = static_cast<int>(comp.indices.size()) - 1;
    report.sigma.push_back(p);
    report.components.push_back(std::move(comp));
  }
  return report;
}

/// One canonical tuple per row, coordinates as field indices.
inline std::string points_csv(const PointSet& pts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pts.weights().size(); ++i)
    out << (i ? "," : "") << 'x' << i;
  out << '\n';
  for (const auto& pt : pts) {
    for (std::size_t i = 0; i < pt.coords.size(); ++i)
      out << (i ? "," : "") << pt.coords[i].index();
    out << '\n';
  }
  return out.str();
}

}  // namespace wps
