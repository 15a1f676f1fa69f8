#pragma once

// Delorme reduction P(a_0 b, ..., a_i, ..., a_m b) = P(a_0, ..., a_m) for
// gcd(b, a_i) = 1.

#include <numeric>
#include <string>
#include <vector>

#include "wps/errors.hpp"
#include "wps/weighted_poly.hpp"
#include "wps/weighted_space.hpp"

namespace wps {

/// One reduction step dividing every weight except a_index by b.
struct DelormeStep {
  WeightSystem source;
  WeightSystem target;
  std::size_t index = 0;
  int b = 1;

  /// (..., x_i, ...) -> (..., x_i^b, ...), canonical in the target.
  WeightedPoint map_point(const FieldCtx& ctx, const WeightedPoint& pt) const {
    std::vector<FieldElement> raw = pt.coords;
    raw[index] = ctx.pow(raw[index], static_cast<std::uint64_t>(b));
    return canonicalize(target, ctx, raw);
  }

  /// Replaces X_i^b by X_i; the degree must be a multiple of b.
  WeightedPolynomial map_polynomial(const WeightedPolynomial& f) const {
    if (f.weights() != source)
      throw InvalidArgument("polynomial does not live on P(" + source.to_string() + ")");
    if (f.degree() % b != 0)
      throw InvalidArgument("degree " + std::to_string(f.degree()) +
                            " is not divisible by " + std::to_string(b));
    WeightedPolynomial out(target, f.degree() / b);
    for (const auto& [e, c] : f.terms()) {
      Exponents r = e;
      r[index] /= b;
      out.set_term(r, c);
    }
    return out;
  }

  /// Inverse of map_polynomial: X_i -> X_i^b.
  WeightedPolynomial lift_polynomial(const WeightedPolynomial& g) const {
    if (g.weights() != target)
      throw InvalidArgument("polynomial does not live on P(" + target.to_string() + ")");
    WeightedPolynomial out(source, g.degree() * b);
    for (const auto& [e, c] : g.terms()) {
      Exponents r = e;
      r[index] *= b;
      out.set_term(r, c);
    }
    return out;
  }
};

inline DelormeStep delorme_reduce(const WeightSystem& ws, std::size_t i, int b) {
  if (i >= ws.size())
    throw InvalidArgument("index " + std::to_string(i) + " out of range for (" +
                          ws.to_string() + ")");
  if (b < 1) throw InvalidArgument("reduction factor must be positive");
  if (std::gcd(b, ws[i]) != 1)
    throw InvalidArgument("gcd(" + std::to_string(b) + ", a_" + std::to_string(i) +
                          ") must be 1");
  std::vector<int> reduced = ws.weights();
  for (std::size_t j = 0; j < ws.size(); ++j) {
    if (j == i) continue;
    if (reduced[j] % b != 0)
      throw InvalidArgument("weight a_" + std::to_string(j) + " = " +
                            std::to_string(reduced[j]) + " is not divisible by " +
                            std::to_string(b));
    reduced[j] /= b;
  }
  return DelormeStep{ws, WeightSystem(std::move(reduced)), i, b};
}

/// Reduces until the weights are well formed; the steps compose left to right.
inline std::vector<DelormeStep> delorme_normalize(const WeightSystem& ws) {
  std::vector<DelormeStep> chain;
  WeightSystem current = ws;
  bool changed = true;
  while (changed && current.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      std::vector<int> rest;
      for (std::size_t j = 0; j < current.size(); ++j)
        if (j != i) rest.push_back(current[j]);
      const int b = static_cast<int>(gcd_of(rest));
      if (b > 1) {
        chain.push_back(delorme_reduce(current, i, b));
        current = chain.back().target;
        changed = true;
      }
    }
  }
  return chain;
}

}  // namespace wps
